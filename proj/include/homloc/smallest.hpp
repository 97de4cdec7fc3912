#pragma once

// Measuring and localizing the smallest nontrivial class, and localizing an
// arbitrary class by its minimal-radius representative.

#include <optional>
#include <string_view>

#include "homloc/fast_bmin.hpp"
#include "homloc/measurement.hpp"

namespace homloc {

enum class Engine { naive, fast };

inline std::string_view to_string(Engine e) { return e == Engine::naive ? "naive" : "fast"; }

struct EngineConfig {
  Engine engine = Engine::fast;
  LinalgConfig linalg{};
  std::optional<VertexId> root;  // BFS root override for the fast engine
};

struct SmallestClassResult {
  Radius size = 0;
  Chain cycle;
  VertexId center = 0;
  SubcomplexMask ball;
  BminResult search;
};

inline BminResult bmin(const SimplicialComplex& k, int d, const EngineConfig& cfg) {
  return cfg.engine == Engine::naive ? bmin_naive(k, d) : bmin_fast(k, d, cfg.linalg, cfg.root);
}

inline SmallestClassResult measure_smallest(const SimplicialComplex& k, int d, const EngineConfig& cfg = {}) {
  SmallestClassResult out;
  out.search = bmin(k, d, cfg);
  out.size = out.search.radius;
  out.center = out.search.center;
  out.ball = geodesic_ball(k, out.center, out.size);
  out.cycle = localized_cycle(k, out.ball, d);
  return out;
}

struct LocalizedClass {
  Radius size = kInfRadius;
  VertexId center = 0;
  Chain cycle;  // homologous to the input, carried by the ball
};

namespace detail {

// Representative of [z] supported in the mask, if one exists.
inline std::optional<Chain> carried_representative(const SimplicialComplex& k, const SubcomplexMask& mask,
                                                   const Chain& z) {
  const int d = z.dim;
  const auto keep = mask.outside(d, k.count(d));
  const auto& up = k.boundary_matrix(d + 1);
  EchelonBasis ech(static_cast<std::size_t>(std::count(keep.begin(), keep.end(), true)), true);
  for (const auto& c : up.columns) ech.insert(restrict_vector(c, keep));
  const auto ids = ech.solve(restrict_vector(z.support, keep));
  if (!ids) return std::nullopt;
  Chain rep = z;
  for (std::size_t j : *ids) rep.support += up.columns[j];
  return rep;
}

}  // namespace detail

// Smallest geodesic ball carrying the class of z, and a representative in
// it. Radii are searched per center by bisection over attained values.
inline LocalizedClass localize_class(const SimplicialComplex& k, const Chain& z) {
  if (z.support.length != k.count(z.dim)) throw DimensionMismatch("localize_class: chain length differs from n_d");
  if (!k.is_cycle(z)) throw PreconditionError("localize_class: chain is not a cycle");
  if (in_span(k.boundary_matrix(z.dim + 1), z.support)) throw NoClassError("localize_class: cycle bounds");

  LocalizedClass best;
  for (VertexId p = 0; p < k.num_vertices(); ++p) {
    if (k.is_sealed_vertex(p)) continue;
    const FilterValues f = filter_from_vertex(k, p);
    std::vector<Radius> levels;
    for (const auto& row : f.value)
      for (Radius r : row)
        if (is_finite(r) && r < best.size) levels.push_back(r);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::size_t lo = 0, hi = levels.size();  // first carrying level in [lo, hi)
    std::optional<Chain> found;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto rep = detail::carried_representative(k, sublevel_mask(f, levels[mid]), z);
      if (rep) {
        hi = mid;
        found = std::move(rep);
      } else {
        lo = mid + 1;
      }
    }
    if (found && lo < levels.size() && levels[lo] < best.size) {
      // `found` belongs to the last successful probe, which is levels[lo].
      best = LocalizedClass{levels[lo], p, std::move(*found)};
    }
  }
  return best;
}

}  // namespace homloc
