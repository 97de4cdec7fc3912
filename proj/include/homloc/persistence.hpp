#pragma once

// Persistent homology of a complex filtered by a vertex distance function.

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "homloc/complex.hpp"

namespace homloc {

struct SimplexRef {
  int dim = 0;
  std::size_t index = 0;

  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

struct Filtration {
  std::vector<SimplexRef> order;
  std::vector<Radius> value;  // value[k] belongs to order[k]
  // position[d][i]: place of simplex (d, i) in `order`.
  std::vector<std::vector<std::size_t>> position;
};

struct PersistenceDiagram {
  int dim = 0;
  std::vector<std::pair<Radius, Radius>> pairs;
  std::vector<Radius> essential_births;  // ascending
};

// Sorts all simplices by (value, dimension, index). INF sorts last, so the
// sealed simplices form a suffix. Throws if a face exceeds its coface.
inline Filtration build_filtration(const SimplicialComplex& k, const FilterValues& f) {
  Filtration filt;
  filt.position.resize(static_cast<std::size_t>(std::max(k.top_dim() + 1, 0)));
  for (int d = 0; d <= k.top_dim(); ++d) {
    if (f.value.size() <= static_cast<std::size_t>(d) || f.value[static_cast<std::size_t>(d)].size() != k.count(d))
      throw DimensionMismatch("build_filtration: filter does not cover the complex");
    for (std::size_t i = 0; i < k.count(d); ++i) {
      for (std::size_t face : k.boundary_matrix(d).columns[i].support)
        if (f.at(d - 1, face) > f.at(d, i))
          throw PreconditionError("build_filtration: filter value decreases from face to coface");
      filt.order.push_back({d, i});
    }
  }
  std::sort(filt.order.begin(), filt.order.end(), [&](const SimplexRef& a, const SimplexRef& b) {
    const Radius va = f.at(a.dim, a.index), vb = f.at(b.dim, b.index);
    if (va != vb) return va < vb;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.index < b.index;
  });
  filt.value.reserve(filt.order.size());
  for (int d = 0; d <= k.top_dim(); ++d) filt.position[static_cast<std::size_t>(d)].resize(k.count(d));
  for (std::size_t pos = 0; pos < filt.order.size(); ++pos) {
    const auto& s = filt.order[pos];
    filt.position[static_cast<std::size_t>(s.dim)][s.index] = pos;
    filt.value.push_back(f.at(s.dim, s.index));
  }
  return filt;
}

namespace detail {

// Columns of dimension `dim` in filtration order, rows = filtration positions.
inline std::vector<std::vector<std::size_t>> filtered_columns(const SimplicialComplex& k, const Filtration& filt,
                                                              int dim, std::vector<std::size_t>& owner_pos) {
  std::vector<std::vector<std::size_t>> cols;
  owner_pos.clear();
  for (std::size_t pos = 0; pos < filt.order.size(); ++pos) {
    const auto& s = filt.order[pos];
    if (s.dim != dim) continue;
    std::vector<std::size_t> col;
    if (dim > 0)
      for (std::size_t face : k.boundary_matrix(dim).columns[s.index].support)
        col.push_back(filt.position[static_cast<std::size_t>(dim - 1)][face]);
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
    owner_pos.push_back(pos);
  }
  return cols;
}

inline void add_into(std::vector<std::size_t>& dst, const std::vector<std::size_t>& src) {
  std::vector<std::size_t> out;
  out.reserve(dst.size() + src.size());
  std::set_symmetric_difference(dst.begin(), dst.end(), src.begin(), src.end(), std::back_inserter(out));
  dst = std::move(out);
}

// Standard reduction; returns, for each column, its final low (or npos).
inline std::vector<std::size_t> reduce_lows(std::vector<std::vector<std::size_t>>& cols, std::size_t rows) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(rows, kNone);
  std::vector<std::size_t> low(cols.size(), kNone);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = cols[j];
    while (!col.empty()) {
      const std::size_t l = col.back();
      if (owner[l] == kNone) {
        owner[l] = j;
        low[j] = l;
        break;
      }
      add_into(col, cols[owner[l]]);
    }
  }
  return low;
}

}  // namespace detail

// Persistence pairs and essential classes of dimension d. Values are filter
// values, not positions.
inline PersistenceDiagram persist(const SimplicialComplex& k, const Filtration& filt, int d) {
  if (d < 0) throw PreconditionError("persist: dimension must be non-negative");
  PersistenceDiagram diag;
  diag.dim = d;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const std::size_t n = filt.order.size();

  std::vector<std::size_t> pos_d, pos_up;
  auto cols_d = detail::filtered_columns(k, filt, d, pos_d);
  auto cols_up = detail::filtered_columns(k, filt, d + 1, pos_up);
  const auto low_d = detail::reduce_lows(cols_d, n);
  const auto low_up = detail::reduce_lows(cols_up, n);

  std::vector<bool> killed(n, false);
  for (std::size_t j = 0; j < cols_up.size(); ++j) {
    if (low_up[j] == kNone) continue;
    killed[low_up[j]] = true;
    diag.pairs.emplace_back(filt.value[low_up[j]], filt.value[pos_up[j]]);
  }
  for (std::size_t j = 0; j < cols_d.size(); ++j)
    if (low_d[j] == kNone && !killed[pos_d[j]]) diag.essential_births.push_back(filt.value[pos_d[j]]);
  std::sort(diag.pairs.begin(), diag.pairs.end());
  std::sort(diag.essential_births.begin(), diag.essential_births.end());
  return diag;
}

// r(p): birth value of the first essential d-class under the distance from
// p. Classes only reachable through sealed simplices are born at INF and
// are not reported.
inline std::optional<Radius> first_essential_birth(const SimplicialComplex& k, VertexId p, int d) {
  const Filtration filt = build_filtration(k, filter_from_vertex(k, p));
  const PersistenceDiagram diag = persist(k, filt, d);
  if (diag.essential_births.empty() || !is_finite(diag.essential_births.front())) return std::nullopt;
  return diag.essential_births.front();
}

// Debug dump: `d birth death` per pair, `inf` for infinite values.
inline void write_diagram(std::ostream& os, const PersistenceDiagram& diag) {
  auto put = [&](Radius r) -> std::ostream& { return is_finite(r) ? (os << r) : (os << "inf"); };
  for (const auto& [b, dth] : diag.pairs) {
    os << diag.dim << ' ';
    put(b) << ' ';
    put(dth) << '\n';
  }
  for (Radius b : diag.essential_births) {
    os << diag.dim << ' ';
    put(b) << " inf\n";
  }
}

}  // namespace homloc
