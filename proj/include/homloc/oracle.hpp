#pragma once

// Brute-force references for small complexes: class sizes by exhaustive
// ball search, the naive matroid greedy over all 2^beta - 1 classes, and
// minimum-volume / minimum-diameter representatives by coset enumeration.
// Everything here is exponential somewhere; caps guard each search.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "homloc/basis.hpp"
#include "homloc/fast_bmin.hpp"
#include "homloc/smallest.hpp"

namespace homloc::oracle {

struct OracleCaps {
  std::size_t max_betti = 12;
  std::size_t max_boundary_rank = 20;
};

// Coordinates of a class over the columns of a NonboundingBasis.
struct ClassId {
  std::vector<bool> coeffs;

  bool nonzero() const { return std::find(coeffs.begin(), coeffs.end(), true) != coeffs.end(); }
  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend auto operator<=>(const ClassId& a, const ClassId& b) {
    return std::lexicographical_compare_three_way(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                                  b.coeffs.end());
  }
};

inline ClassId class_from_bits(std::uint64_t bits, std::size_t beta) {
  ClassId h;
  for (std::size_t i = 0; i < beta; ++i) h.coeffs.push_back(((bits >> i) & 1U) != 0);
  return h;
}

inline std::uint64_t bits_of(const ClassId& h) {
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i)
    if (h.coeffs[i]) b |= std::uint64_t{1} << i;
  return b;
}

inline Chain representative(const NonboundingBasis& basis, const ClassId& h) {
  if (h.coeffs.size() != basis.betti()) throw DimensionMismatch("ClassId length differs from beta_d");
  Chain z{basis.dim, GF2Vector(basis.h_hat.rows)};
  for (std::size_t i = 0; i < h.coeffs.size(); ++i)
    if (h.coeffs[i]) z.support += basis.h_hat.columns[i];
  return z;
}

// Coordinates of the class of a cycle z over the basis.
inline ClassId class_of(const SimplicialComplex& k, const NonboundingBasis& basis, const Chain& z) {
  const auto& up = k.boundary_matrix(basis.dim + 1);
  EchelonBasis ech(k.count(basis.dim), true);
  for (const auto& c : up.columns) ech.insert(c);
  for (const auto& c : basis.h_hat.columns) ech.insert(c);
  const auto ids = ech.solve(z.support);
  if (!ids) throw PreconditionError("class_of: chain is not a cycle");
  ClassId h;
  h.coeffs.assign(basis.betti(), false);
  for (std::size_t id : *ids)
    if (id >= up.cols) h.coeffs[id - up.cols] = true;
  return h;
}

// Some representative of h lies in the mask: after dropping the rows of the
// mask's d-simplices, the representative is a combination of boundaries.
inline bool carries_class(const SimplicialComplex& k, const SubcomplexMask& mask, const ClassId& h,
                          const NonboundingBasis& basis) {
  if (!h.nonzero()) throw PreconditionError("carries_class: trivial class");
  const int d = basis.dim;
  const auto keep = mask.outside(d, k.count(d));
  const SparseGF2Matrix up_out = restrict_rows(k.boundary_matrix(d + 1), keep);
  SparseGF2Matrix with_rep = up_out;
  with_rep.append_column(restrict_vector(representative(basis, h).support, keep));
  return rank_dense(with_rep) == rank_dense(up_out);
}

// Radii attained by f_p, ascending.
inline std::vector<Radius> attained_radii(const FilterValues& f) {
  std::vector<Radius> levels;
  for (const auto& row : f.value)
    for (Radius r : row)
      if (is_finite(r)) levels.push_back(r);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

struct BallHit {
  Radius size = kInfRadius;
  VertexId center = 0;
};

// min over all (p, r) with B_p^r carrying h, scanning every center and
// every radius upward.
inline BallHit exhaustive_smallest_ball(const SimplicialComplex& k, const ClassId& h, const NonboundingBasis& basis) {
  BallHit best;
  for (VertexId p = 0; p < k.num_vertices(); ++p) {
    if (k.is_sealed_vertex(p)) continue;
    const FilterValues f = filter_from_vertex(k, p);
    for (Radius r : attained_radii(f)) {
      if (r >= best.size) break;
      if (carries_class(k, sublevel_mask(f, r), h, basis)) {
        best = {r, p};
        break;
      }
    }
  }
  return best;
}

inline Radius exhaustive_class_size(const SimplicialComplex& k, const ClassId& h, const NonboundingBasis& basis) {
  return exhaustive_smallest_ball(k, h, basis).size;
}

struct ClassSize {
  ClassId id;
  Radius size = kInfRadius;
  VertexId center = 0;
};

// Every nontrivial class with its size, sorted by (size, coefficients).
inline std::vector<ClassSize> enumerate_class_sizes(const SimplicialComplex& k, const NonboundingBasis& basis,
                                                    const OracleCaps& caps = {}) {
  const std::size_t beta = basis.betti();
  if (beta > caps.max_betti || beta >= 63) throw CapacityError("class enumeration: beta_d exceeds the cap");
  std::vector<ClassSize> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << beta); ++bits) {
    ClassId h = class_from_bits(bits, beta);
    const BallHit hit = exhaustive_smallest_ball(k, h, basis);
    out.push_back({std::move(h), hit.size, hit.center});
  }
  std::sort(out.begin(), out.end(), [](const ClassSize& a, const ClassSize& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.id < b.id;
  });
  return out;
}

struct GreedyOracleResult {
  BasisResult basis;
  std::vector<ClassId> classes;  // aligned with basis.entries
};

// Smallest classes first, keeping each one independent of those already kept.
inline GreedyOracleResult naive_greedy(const SimplicialComplex& k, int d, const OracleCaps& caps = {}) {
  GreedyOracleResult out;
  out.basis.dim = d;
  if (betti(k, d) == 0) return out;
  if (betti(k, d) > caps.max_betti) throw CapacityError("naive greedy: beta_d exceeds the cap");
  const NonboundingBasis nb = precompute_nonbounding_basis(k, d);
  const std::size_t beta = nb.betti();

  std::vector<std::uint64_t> pivots(beta, 0);  // xor basis keyed by top bit
  for (const auto& cs : enumerate_class_sizes(k, nb, caps)) {
    std::uint64_t v = bits_of(cs.id);
    while (v != 0) {
      const auto top = static_cast<std::size_t>(63 - std::countl_zero(v));
      if (pivots[top] == 0) break;
      v ^= pivots[top];
    }
    if (v == 0) continue;
    pivots[static_cast<std::size_t>(63 - std::countl_zero(v))] = v;

    const SubcomplexMask ball = geodesic_ball(k, cs.center, cs.size);
    auto rep = detail::carried_representative(k, ball, representative(nb, cs.id));
    out.basis.entries.push_back({cs.size, std::move(*rep), cs.center});
    out.classes.push_back(cs.id);
    if (out.classes.size() == beta) break;
  }
  return out;
}

inline BasisResult naive_greedy_basis(const SimplicialComplex& k, int d, const OracleCaps& caps = {}) {
  return naive_greedy(k, d, caps).basis;
}

namespace detail {

// Independent columns of boundary_{d+1}: generators of the boundary space.
inline std::vector<BitColumn> boundary_generators(const SimplicialComplex& k, int d, const OracleCaps& caps) {
  const auto& up = k.boundary_matrix(d + 1);
  EchelonBasis ech(k.count(d));
  std::vector<BitColumn> gens;
  for (const auto& c : up.columns)
    if (ech.insert(c)) gens.emplace_back(k.count(d), c.support);
  if (gens.size() > caps.max_boundary_rank) throw CapacityError("coset enumeration: boundary rank exceeds the cap");
  return gens;
}

// Visits z0 + every boundary once, in Gray-code order.
template <typename Visit>
void for_each_homologous(const SimplicialComplex& k, const Chain& z0, const OracleCaps& caps, Visit&& visit) {
  if (z0.support.length != k.count(z0.dim)) throw DimensionMismatch("chain length differs from n_d");
  if (!k.is_cycle(z0)) throw PreconditionError("coset enumeration: chain is not a cycle");
  const auto gens = boundary_generators(k, z0.dim, caps);
  BitColumn cur(k.count(z0.dim), z0.support.support);
  visit(cur);
  const std::uint64_t total = std::uint64_t{1} << gens.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    cur.xor_with(gens[static_cast<std::size_t>(std::countr_zero(i))]);
    visit(cur);
  }
}

inline std::vector<std::vector<Radius>> all_pairs_distances(const SimplicialComplex& k) {
  std::vector<std::vector<Radius>> dist(k.num_vertices());
  for (VertexId p = 0; p < k.num_vertices(); ++p)
    dist[p] = k.is_sealed_vertex(p) ? std::vector<Radius>(k.num_vertices(), kInfRadius) : geodesic_distance(k, p);
  return dist;
}

}  // namespace detail

// Homologous cycle with the fewest simplices; ties by lexicographic support.
inline Chain exhaustive_min_volume_cycle(const SimplicialComplex& k, const Chain& z0, const OracleCaps& caps = {}) {
  std::size_t best_vol = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best;
  detail::for_each_homologous(k, z0, caps, [&](const BitColumn& c) {
    const std::size_t vol = c.count();
    if (vol > best_vol) return;
    auto supp = c.support();
    if (vol < best_vol || supp < best) {
      best_vol = vol;
      best = std::move(supp);
    }
  });
  return k.make_chain(z0.dim, std::move(best));
}

// Homologous cycle with the smallest diameter; ties by volume, then support.
inline Chain exhaustive_min_diameter_cycle(const SimplicialComplex& k, const Chain& z0, const OracleCaps& caps = {}) {
  const auto dist = detail::all_pairs_distances(k);
  const int d = z0.dim;
  Radius best_diam = kInfRadius;
  std::size_t best_vol = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best;
  bool have = false;
  std::vector<bool> mark(k.num_vertices(), false);
  std::vector<VertexId> verts;
  detail::for_each_homologous(k, z0, caps, [&](const BitColumn& c) {
    auto supp = c.support();
    verts.clear();
    for (std::size_t i : supp)
      for (VertexId v : k.simplex(d, i))
        if (!mark[v]) {
          mark[v] = true;
          verts.push_back(v);
        }
    Radius diam = 0;
    for (VertexId a : verts) {
      mark[a] = false;
      for (VertexId b : verts) diam = std::max(diam, dist[a][b]);
    }
    const std::size_t vol = supp.size();
    const bool better = !have || diam < best_diam || (diam == best_diam && (vol < best_vol || (vol == best_vol && supp < best)));
    if (better) {
      have = true;
      best_diam = diam;
      best_vol = vol;
      best = std::move(supp);
    }
  });
  return k.make_chain(d, std::move(best));
}

}  // namespace homloc::oracle
