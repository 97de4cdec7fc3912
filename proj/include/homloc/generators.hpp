#pragma once

// Small named complexes and parametric families used by the tests, the
// benchmark and the sample inputs. Each generator returns the raw vertex
// lists; build_complex turns them into a complex. The order of the lists
// fixes simplex indices, which in turn fixes reduction order.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "homloc/complex.hpp"

namespace homloc::gen {

using RawComplex = std::vector<std::vector<std::uint64_t>>;

inline RawComplex hollow_triangle() { return {{0, 1}, {1, 2}, {0, 2}}; }

inline RawComplex filled_triangle() { return {{0, 1, 2}}; }

inline RawComplex tetrahedron_boundary() { return {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}; }

inline RawComplex cycle_graph(std::uint64_t n, std::uint64_t offset = 0) {
  RawComplex out;
  for (std::uint64_t i = 0; i < n; ++i) out.push_back({offset + i, offset + (i + 1) % n});
  return out;
}

// Path of `length` edges from a to b through fresh vertices starting at `fresh`.
inline RawComplex path(std::uint64_t a, std::uint64_t b, std::uint64_t length, std::uint64_t fresh) {
  RawComplex out;
  std::uint64_t prev = a;
  for (std::uint64_t i = 1; i < length; ++i) {
    out.push_back({prev, fresh});
    prev = fresh++;
  }
  out.push_back({prev, b});
  return out;
}

inline void append(RawComplex& dst, const RawComplex& src) { dst.insert(dst.end(), src.begin(), src.end()); }

// Minimal 7-vertex triangulation of the torus.
inline RawComplex torus7() {
  RawComplex out;
  for (std::uint64_t i = 0; i < 7; ++i) {
    out.push_back({i, (i + 1) % 7, (i + 3) % 7});
    out.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return out;
}

// m x n grid on the torus, each square split along its (i,j)-(i+1,j+1) diagonal.
inline RawComplex grid_torus(std::uint64_t m, std::uint64_t n) {
  auto v = [&](std::uint64_t i, std::uint64_t j) { return (i % m) * n + (j % n); };
  RawComplex out;
  for (std::uint64_t i = 0; i < m; ++i)
    for (std::uint64_t j = 0; j < n; ++j) {
      out.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      out.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  return out;
}

struct Rect {
  std::uint64_t x = 0, y = 0, w = 1, h = 1;  // squares [x, x+w) x [y, y+h)

  bool contains(std::uint64_t i, std::uint64_t j) const { return i >= x && i < x + w && j >= y && j < y + h; }
};

// Triangulated w x h grid of squares with the given squares removed.
inline RawComplex grid_with_holes(std::uint64_t w, std::uint64_t h, const std::vector<Rect>& holes) {
  auto v = [&](std::uint64_t i, std::uint64_t j) { return j * (w + 1) + i; };
  RawComplex out;
  for (std::uint64_t j = 0; j < h; ++j)
    for (std::uint64_t i = 0; i < w; ++i) {
      bool removed = false;
      for (const auto& r : holes) removed = removed || r.contains(i, j);
      if (removed) continue;
      out.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      out.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  return out;
}

// One large and two small holes in a 12 x 9 grid.
inline RawComplex disk_with_three_holes() {
  return grid_with_holes(12, 9, {{1, 2, 4, 4}, {7, 2, 1, 1}, {9, 6, 1, 1}});
}

// Grid scaled by s with a fixed two-hole pattern; roughly 600 s^2 simplices.
inline RawComplex nested_grid(std::uint64_t s) {
  return grid_with_holes(10 * s, 10 * s, {{2 * s, 2 * s, 3 * s, 2 * s}, {6 * s, 6 * s, s, 2 * s}});
}

// Stacked rings of the given sizes (each >= 3) joined by strips of triangles.
inline RawComplex tube(const std::vector<std::uint64_t>& ring_sizes) {
  RawComplex out;
  std::vector<std::uint64_t> first;
  std::uint64_t next = 0;
  for (auto s : ring_sizes) {
    first.push_back(next);
    next += s;
  }
  for (std::size_t k = 0; k + 1 < ring_sizes.size(); ++k) {
    const std::uint64_t a = ring_sizes[k], b = ring_sizes[k + 1];
    auto va = [&](std::uint64_t i) { return first[k] + i % a; };
    auto vb = [&](std::uint64_t j) { return first[k + 1] + j % b; };
    std::uint64_t i = 0, j = 0;
    while (i < a || j < b) {
      // Advance whichever ring has the smaller next angle.
      if (j == b || (i < a && (i + 1) * b <= (j + 1) * a)) {
        out.push_back({va(i), va(i + 1), vb(j)});
        ++i;
      } else {
        out.push_back({va(i), vb(j), vb(j + 1)});
        ++j;
      }
    }
  }
  return out;
}

// A torus with one triangle replaced by a capped triangular tube. The tube
// rings are cycles of the tube that bound in K (through the cap).
struct TorusWithTail {
  RawComplex raw;
  std::uint64_t torus_vertices = 0;
  std::vector<std::uint64_t> tail_middle_ring;
};

inline TorusWithTail torus_with_tail(std::uint64_t m, std::uint64_t n, std::uint64_t tail_rings) {
  TorusWithTail t;
  auto v = [&](std::uint64_t i, std::uint64_t j) { return (i % m) * n + (j % n); };
  const std::vector<std::uint64_t> hole{v(0, 0), v(1, 0), v(1, 1)};
  for (const auto& s : grid_torus(m, n))
    if (s != hole) t.raw.push_back(s);
  t.torus_vertices = m * n;
  std::vector<std::uint64_t> ring = hole;
  std::uint64_t fresh = m * n;
  for (std::uint64_t k = 0; k < tail_rings; ++k) {
    std::vector<std::uint64_t> up{fresh, fresh + 1, fresh + 2};
    fresh += 3;
    for (std::uint64_t i = 0; i < 3; ++i) {
      t.raw.push_back({ring[i], ring[(i + 1) % 3], up[(i + 1) % 3]});
      t.raw.push_back({ring[i], up[i], up[(i + 1) % 3]});
    }
    ring = up;
    if (k == tail_rings / 2) t.tail_middle_ring = ring;
  }
  t.raw.push_back(ring);
  return t;
}

// A 4-cycle (vertices 0..3) and an 8-cycle (vertices 4..11) joined by a path
// of `bridge` edges from vertex 0 to vertex 4.
inline RawComplex two_cycles_joined(std::uint64_t bridge = 3) {
  RawComplex out = cycle_graph(4, 0);
  append(out, cycle_graph(8, 4));
  append(out, path(0, 4, bridge, 12));
  return out;
}

// The same cycles without the bridge.
inline RawComplex two_disjoint_cycles() {
  RawComplex out = cycle_graph(4, 0);
  append(out, cycle_graph(8, 4));
  return out;
}

// A 12-cycle (vertices 0..11) with two 4-cycles wedged on at vertices 0 and 6.
inline RawComplex three_circles() {
  RawComplex out = cycle_graph(12, 0);
  append(out, {{0, 12}, {12, 13}, {13, 14}, {14, 0}});
  append(out, {{6, 15}, {15, 16}, {16, 17}, {17, 6}});
  return out;
}

// A hollow triangle a=1, b=0, c=2 with a triangle glued to each side (apexes
// x=3, y=4, w=5). The 5-edge cycle a-x-b-y-c is listed first so that it is
// the first cycle closed by the column reduction; it lies in the radius-1
// ball around b, has diameter 2, while the hole triangle has diameter 1.
inline RawComplex pinched_annulus() {
  return {{1, 3}, {0, 3}, {0, 4}, {2, 4}, {1, 2}, {0, 1, 3}, {0, 2, 4}, {1, 2, 5}};
}

// Random connected 2-complex: a random spanning tree, extra edges with
// probability p_edge, and each 3-clique filled with probability p_tri.
inline RawComplex random_complex(std::uint64_t n, double p_edge, double p_tri, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::uint64_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(0, i - 1);
    edges.insert({pick(rng), i});
  }
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j)
      if (coin(rng) < p_edge) edges.insert({i, j});
  RawComplex out;
  for (const auto& [a, b] : edges) out.push_back({a, b});
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j)
      for (std::uint64_t k = j + 1; k < n; ++k)
        if (edges.count({i, j}) && edges.count({j, k}) && edges.count({i, k}) && coin(rng) < p_tri)
          out.push_back({i, j, k});
  return out;
}

inline SimplicialComplex make(const RawComplex& raw) { return build_complex(raw); }

}  // namespace homloc::gen
