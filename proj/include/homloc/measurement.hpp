#pragma once

// Betti numbers, the persistence sweep for the smallest carrying ball, and
// the radius/diameter of cycles.

#include <algorithm>
#include <optional>
#include <vector>

#include "homloc/complex.hpp"
#include "homloc/gf2.hpp"
#include "homloc/persistence.hpp"

namespace homloc {

// beta_d = (n_d - rank boundary_d) - rank boundary_{d+1}, exact over GF(2).
inline std::size_t betti(const SimplicialComplex& k, int d) {
  if (d < 0 || d > k.top_dim()) return 0;
  const std::size_t cycles = k.count(d) - rank_dense(k.boundary_matrix(d));
  return cycles - rank_dense(k.boundary_matrix(d + 1));
}

struct BminResult {
  VertexId center = 0;
  Radius radius = kInfRadius;
  std::size_t ball_tests = 0;    // carrying tests (fast engine)
  std::size_t decrements = 0;    // successful tests (fast engine)
  std::size_t persistence_runs = 0;
  bool fell_back = false;        // fast engine failed its final check
};

inline void require_measurable(const SimplicialComplex& k, int d) {
  if (d < 1) throw PreconditionError("ball sizes are defined for dimension >= 1");
  if (betti(k, d) == 0) throw NoClassError("no nontrivial homology class in dimension " + std::to_string(d));
}

// Smallest r(p) over all non-sealed vertices; ties go to the smallest id.
inline BminResult bmin_naive(const SimplicialComplex& k, int d) {
  require_measurable(k, d);
  BminResult best;
  for (VertexId p = 0; p < k.num_vertices(); ++p) {
    if (k.is_sealed_vertex(p)) continue;
    ++best.persistence_runs;
    const auto r = first_essential_birth(k, p, d);
    if (r && *r < best.radius) {
      best.radius = *r;
      best.center = p;
    }
  }
  if (!is_finite(best.radius)) throw NoClassError("no vertex sees a finite essential class");
  return best;
}

// Maps a combination of the selected columns back to a chain of K.
inline Chain lift_chain(const SimplicialComplex& k, int d, const std::vector<std::size_t>& columns,
                        const GF2Vector& combo) {
  std::vector<std::size_t> support;
  support.reserve(combo.support.size());
  for (std::size_t j : combo.support) support.push_back(columns[j]);
  return k.make_chain(d, std::move(support));
}

// Cycle basis of the ball, in column-reduction order, filtered to the first
// member that does not bound in K.
inline Chain localized_cycle(const SimplicialComplex& k, const SubcomplexMask& ball, int d) {
  std::vector<std::size_t> columns;
  for (std::size_t i = 0; i < k.count(d); ++i)
    if (ball.contains(d, i)) columns.push_back(i);
  const auto& bd = k.boundary_matrix(d);
  SparseGF2Matrix sub(bd.rows, 0);
  for (std::size_t i : columns) sub.append_column(bd.columns[i]);

  EchelonBasis boundaries(k.count(d));
  for (const auto& c : k.boundary_matrix(d + 1).columns) boundaries.insert(c);

  for (const auto& combo : column_reduce(sub).kernel_basis()) {
    Chain z = lift_chain(k, d, columns, combo);
    if (!boundaries.in_span(z.support)) return z;
  }
  throw PreconditionError("localized_cycle: the subcomplex carries no nonbounding cycle");
}

namespace detail {

// Distances from every vertex of z, one BFS per vertex.
inline std::vector<std::vector<Radius>> distances_from_chain(const SimplicialComplex& k, const Chain& z) {
  if (z.empty()) throw PreconditionError("empty cycle");
  std::vector<std::vector<Radius>> out;
  for (VertexId q : chain_vertices(k, z)) {
    if (k.is_sealed_vertex(q)) {
      out.emplace_back(k.num_vertices(), kInfRadius);
      continue;
    }
    out.push_back(geodesic_distance(k, q));
  }
  return out;
}

}  // namespace detail

// min over non-sealed p of max over vertices q of z of dist(p, q).
inline Radius cycle_radius(const SimplicialComplex& k, const Chain& z) {
  const auto dist = detail::distances_from_chain(k, z);
  Radius best = kInfRadius;
  for (VertexId p = 0; p < k.num_vertices(); ++p) {
    if (k.is_sealed_vertex(p)) continue;
    Radius worst = 0;
    for (const auto& row : dist) worst = std::max(worst, row[p]);
    best = std::min(best, worst);
  }
  return best;
}

// Largest geodesic distance between two vertices of z.
inline Radius cycle_diameter(const SimplicialComplex& k, const Chain& z) {
  const auto verts = chain_vertices(k, z);
  const auto dist = detail::distances_from_chain(k, z);
  Radius worst = 0;
  for (const auto& row : dist)
    for (VertexId q : verts) worst = std::max(worst, row[q]);
  return worst;
}

}  // namespace homloc
