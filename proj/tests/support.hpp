#pragma once

// Test-only references, written without the library's elimination code so
// they can check it: plain dense GF(2) rank, Floyd-Warshall distances, and
// the direct carrying test.

#include <cstdint>
#include <random>
#include <vector>

#include "homloc/homloc.hpp"

namespace testing_support {

using homloc::Radius;
using homloc::SimplicialComplex;
using homloc::SparseGF2Matrix;

using DenseRows = std::vector<std::vector<std::uint8_t>>;

inline DenseRows to_dense(const SparseGF2Matrix& m) {
  DenseRows a(m.rows, std::vector<std::uint8_t>(m.cols, 0));
  for (std::size_t j = 0; j < m.cols; ++j)
    for (std::size_t i : m.columns[j].support) a[i][j] = 1;
  return a;
}

inline std::size_t plain_rank(DenseRows a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && !a[piv][c]) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a[i][c])
        for (std::size_t j = c; j < cols; ++j) a[i][j] ^= a[r][j];
    ++r;
  }
  return r;
}

inline std::size_t plain_rank(const SparseGF2Matrix& m) { return plain_rank(to_dense(m)); }

inline SparseGF2Matrix random_matrix(std::size_t rows, std::size_t cols, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  SparseGF2Matrix m(rows, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < rows; ++i)
      if (coin(rng)) s.push_back(i);
    m.append_column(homloc::GF2Vector(rows, s));
  }
  return m;
}

// Betti number from plain ranks.
inline std::size_t plain_betti(const SimplicialComplex& k, int d) {
  const std::size_t rank_d = d == 0 ? 0 : plain_rank(k.boundary_matrix(d));
  const std::size_t rank_up = d + 1 > k.top_dim() ? 0 : plain_rank(k.boundary_matrix(d + 1));
  return k.count(d) - rank_d - rank_up;
}

// All-pairs hop counts over non-sealed edges by Floyd-Warshall.
inline std::vector<std::vector<Radius>> floyd(const SimplicialComplex& k) {
  const std::size_t n = k.num_vertices();
  std::vector<std::vector<Radius>> d(n, std::vector<Radius>(n, homloc::kInfRadius));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = k.is_sealed_vertex(static_cast<homloc::VertexId>(v)) ? homloc::kInfRadius : 0;
  if (k.top_dim() >= 1)
    for (std::size_t e = 0; e < k.count(1); ++e) {
      if (k.is_sealed(1, e)) continue;
      const auto& s = k.simplex(1, e);
      d[s[0]][s[1]] = d[s[1]][s[0]] = 1;
    }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        d[a][b] = std::min(d[a][b], homloc::add_radius(d[a][m], d[m][b]));
  return d;
}

// Direct definition: some cycle supported in the mask does not bound.
// dim Z_d(mask) > dim (Z_d(mask) intersect B_d) computed as
// rank[boundary_{d+1} | Z(mask)] - rank boundary_{d+1} > 0.
inline bool carries_directly(const SimplicialComplex& k, const homloc::SubcomplexMask& mask, int d) {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < k.count(d); ++i)
    if (mask.contains(d, i)) cols.push_back(i);
  // Kernel of boundary_d on the masked columns, by plain elimination with
  // an identity tag.
  const std::size_t rows = d == 0 ? 0 : k.count(d - 1);
  const std::size_t m = cols.size();
  DenseRows a(m, std::vector<std::uint8_t>(rows + m, 0));  // one row per masked simplex
  for (std::size_t c = 0; c < m; ++c) {
    if (d > 0)
      for (std::size_t r : k.boundary_matrix(d).columns[cols[c]].support) a[c][r] = 1;
    a[c][rows + c] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < rows && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && !a[piv][c]) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < m; ++i)
      if (i != r && a[i][c])
        for (std::size_t j = 0; j < rows + m; ++j) a[i][j] ^= a[r][j];
    ++r;
  }
  SparseGF2Matrix up = d + 1 > k.top_dim() ? SparseGF2Matrix(k.count(d), 0) : k.boundary_matrix(d + 1);
  const std::size_t base = plain_rank(up);
  SparseGF2Matrix with = up;
  for (std::size_t i = r; i < m; ++i) {
    std::vector<std::size_t> s;
    for (std::size_t c = 0; c < m; ++c)
      if (a[i][rows + c]) s.push_back(cols[c]);
    with.append_column(homloc::GF2Vector(k.count(d), s));
  }
  return plain_rank(with) > base;
}

inline SimplicialComplex make(const homloc::gen::RawComplex& raw) { return homloc::gen::make(raw); }

}  // namespace testing_support
