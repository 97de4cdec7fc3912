#pragma once

// Simplicial complexes with unit-length geodesics on the 1-skeleton.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "homloc/common.hpp"
#include "homloc/gf2.hpp"

namespace homloc {

// Sorted, duplicate-free vertex list; dimension is size() - 1.
using Simplex = std::vector<VertexId>;

inline int dimension_of(const Simplex& s) noexcept { return static_cast<int>(s.size()) - 1; }

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (VertexId v : s) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// A set of d-simplices.
struct Chain {
  int dim = 0;
  GF2Vector support;

  bool empty() const noexcept { return support.empty(); }
  friend bool operator==(const Chain&, const Chain&) = default;
};

struct BallProvenance {
  VertexId center = 0;
  Radius radius = 0;
};

// Membership flags per dimension. Masks built by this library are face-closed.
struct SubcomplexMask {
  std::vector<std::vector<bool>> member;
  std::optional<BallProvenance> ball;

  bool contains(int d, std::size_t i) const {
    return d >= 0 && static_cast<std::size_t>(d) < member.size() && member[static_cast<std::size_t>(d)][i];
  }

  // Flags of the d-simplices NOT in the mask.
  std::vector<bool> outside(int d, std::size_t n_d) const {
    std::vector<bool> out(n_d, true);
    if (d >= 0 && static_cast<std::size_t>(d) < member.size())
      for (std::size_t i = 0; i < n_d; ++i) out[i] = !member[static_cast<std::size_t>(d)][i];
    return out;
  }

  bool carries(const Chain& c) const {
    return std::all_of(c.support.support.begin(), c.support.support.end(),
                       [&](std::size_t i) { return contains(c.dim, i); });
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& m : member) n += static_cast<std::size_t>(std::count(m.begin(), m.end(), true));
    return n;
  }
};

// Per-simplex filter values; sealed simplices carry kInfRadius.
struct FilterValues {
  std::vector<std::vector<Radius>> value;

  Radius at(int d, std::size_t i) const { return value[static_cast<std::size_t>(d)][i]; }
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  int top_dim() const noexcept { return static_cast<int>(simplices_.size()) - 1; }
  std::size_t num_vertices() const noexcept { return count(0); }

  std::size_t count(int d) const noexcept {
    if (d < 0 || d > top_dim()) return 0;
    return simplices_[static_cast<std::size_t>(d)].size();
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (const auto& s : simplices_) n += s.size();
    return n;
  }

  const Simplex& simplex(int d, std::size_t i) const { return simplices_.at(static_cast<std::size_t>(d)).at(i); }

  std::optional<std::size_t> index_of(const Simplex& s) const {
    const int d = dimension_of(s);
    if (d < 0 || d > top_dim()) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(d)];
    auto it = idx.find(s);
    if (it == idx.end()) return std::nullopt;
    return it->second;
  }

  bool is_sealed(int d, std::size_t i) const { return sealed_.at(static_cast<std::size_t>(d)).at(i); }
  bool is_sealed_vertex(VertexId v) const { return is_sealed(0, v); }

  std::size_t num_sealed() const {
    std::size_t n = 0;
    for (const auto& s : sealed_) n += static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
    return n;
  }

  // Original label of a vertex (the id used in input files).
  std::uint64_t label(VertexId v) const { return labels_.at(v); }

  // Inverse of label(). Labels stay ascending since apexes take max + 1.
  std::optional<VertexId> vertex_of(std::uint64_t label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
  }

  // Neighbors of v along non-sealed edges, ascending.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }

  // Boundary operator from d-chains to (d-1)-chains: rows n_{d-1}, cols n_d.
  const SparseGF2Matrix& boundary_matrix(int d) const {
    static const SparseGF2Matrix empty;
    if (d < 0 || static_cast<std::size_t>(d) >= boundary_.size()) return empty;
    return boundary_[static_cast<std::size_t>(d)];
  }

  GF2Vector boundary(const Chain& c) const {
    if (c.support.length != count(c.dim)) throw DimensionMismatch("boundary: chain length differs from n_d");
    return boundary_matrix(c.dim).multiply(c.support);
  }

  bool is_cycle(const Chain& c) const { return c.dim == 0 || boundary(c).empty(); }

  Chain make_chain(int d, std::vector<std::size_t> indices) const {
    return Chain{d, GF2Vector(count(d), std::move(indices))};
  }

  // Connected components of the non-sealed 1-skeleton, ordered by their
  // smallest vertex; each component lists its vertices ascending.
  std::vector<std::vector<VertexId>> components() const {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(num_vertices(), false);
    for (VertexId s = 0; s < num_vertices(); ++s) {
      if (seen[s] || is_sealed_vertex(s)) continue;
      std::vector<VertexId> comp{s};
      seen[s] = true;
      for (std::size_t k = 0; k < comp.size(); ++k)
        for (VertexId w : adjacency_[comp[k]])
          if (!seen[w]) {
            seen[w] = true;
            comp.push_back(w);
          }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  friend SimplicialComplex build_complex(const std::vector<std::vector<std::uint64_t>>& raw,
                                         std::size_t min_vertices);
  friend SimplicialComplex seal_cycle(const SimplicialComplex& k, const Chain& z);

 private:
  // Inserts s and every face not yet present. Faces are visited by
  // dimension, then lexicographically, so indices follow first appearance.
  void add_closed(const Simplex& s, bool sealed) {
    const std::size_t n = s.size();
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        Simplex face;
        face.reserve(k);
        for (std::size_t i = 0; i < n; ++i)
          if (pick[i]) face.push_back(s[i]);
        insert(face, sealed);
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }

  void insert(const Simplex& s, bool sealed) {
    const auto d = static_cast<std::size_t>(dimension_of(s));
    if (simplices_.size() <= d) {
      simplices_.resize(d + 1);
      sealed_.resize(d + 1);
      index_.resize(d + 1);
    }
    auto [it, fresh] = index_[d].try_emplace(s, simplices_[d].size());
    if (!fresh) return;
    simplices_[d].push_back(s);
    sealed_[d].push_back(sealed);
  }

  void finalize() {
    const std::size_t n0 = num_vertices();
    adjacency_.assign(n0, {});
    for (std::size_t e = 0; e < count(1); ++e) {
      if (sealed_[1][e]) continue;
      const auto& s = simplices_[1][e];
      adjacency_[s[0]].push_back(s[1]);
      adjacency_[s[1]].push_back(s[0]);
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());

    const int top = top_dim();
    boundary_.assign(static_cast<std::size_t>(std::max(top + 2, 0)), {});
    if (top < 0) return;
    boundary_[0] = SparseGF2Matrix(0, count(0));
    for (int d = 1; d <= top; ++d) {
      SparseGF2Matrix m(count(d - 1), count(d));
      for (std::size_t j = 0; j < count(d); ++j) {
        const auto& s = simplex(d, j);
        std::vector<std::size_t> rows;
        rows.reserve(s.size());
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex face;
          face.reserve(s.size() - 1);
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) face.push_back(s[i]);
          rows.push_back(*index_of(face));
        }
        m.columns[j] = GF2Vector(count(d - 1), std::move(rows));
      }
      boundary_[static_cast<std::size_t>(d)] = std::move(m);
    }
    boundary_[static_cast<std::size_t>(top + 1)] = SparseGF2Matrix(count(top), 0);
  }

  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
  std::vector<std::vector<bool>> sealed_;
  std::vector<std::uint64_t> labels_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<SparseGF2Matrix> boundary_;
};

// Face closure of the given vertex lists. Labels may be any non-negative
// integers; they are renumbered densely in ascending order and kept as
// labels. `min_vertices` adds isolated vertices labelled 0..min_vertices-1.
inline SimplicialComplex build_complex(const std::vector<std::vector<std::uint64_t>>& raw,
                                       std::size_t min_vertices = 0) {
  std::vector<std::uint64_t> labels;
  for (std::uint64_t v = 0; v < min_vertices; ++v) labels.push_back(v);
  for (const auto& s : raw) {
    if (s.empty()) throw MalformedInput("empty simplex");
    std::vector<std::uint64_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw MalformedInput("duplicate vertex within a simplex");
    labels.insert(labels.end(), sorted.begin(), sorted.end());
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  SimplicialComplex k;
  k.labels_ = labels;
  for (VertexId v = 0; v < labels.size(); ++v) k.insert(Simplex{v}, false);
  for (const auto& s : raw) {
    Simplex mapped;
    mapped.reserve(s.size());
    for (std::uint64_t l : s)
      mapped.push_back(static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()));
    std::sort(mapped.begin(), mapped.end());
    k.add_closed(mapped, false);
  }
  k.finalize();
  return k;
}

// Cones z off to a new sealed apex. Existing simplices keep their indices;
// every added simplex is flagged sealed.
inline SimplicialComplex seal_cycle(const SimplicialComplex& k, const Chain& z) {
  if (z.support.length != k.count(z.dim)) throw DimensionMismatch("seal_cycle: chain length differs from n_d");
  if (!k.is_cycle(z)) throw PreconditionError("seal_cycle: chain is not a cycle");
  SimplicialComplex out = k;
  const auto apex = static_cast<VertexId>(k.num_vertices());
  out.labels_.push_back(k.labels_.empty() ? 0 : *std::max_element(k.labels_.begin(), k.labels_.end()) + 1);
  out.insert(Simplex{apex}, true);
  for (std::size_t i : z.support.support) {
    Simplex cone = k.simplex(z.dim, i);
    cone.push_back(apex);
    out.add_closed(cone, true);
  }
  out.finalize();
  return out;
}

// Breadth-first hop counts from p along non-sealed edges.
inline std::vector<Radius> geodesic_distance(const SimplicialComplex& k, VertexId p) {
  if (p >= k.num_vertices()) throw InvalidVertex("vertex " + std::to_string(p) + " is not in the complex");
  if (k.is_sealed_vertex(p)) throw PreconditionError("geodesic_distance: sealed vertex cannot be a center");
  std::vector<Radius> dist(k.num_vertices(), kInfRadius);
  std::deque<VertexId> queue{p};
  dist[p] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : k.neighbors(u))
      if (dist[w] == kInfRadius) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

// Extends per-vertex values to simplices by the max rule.
inline FilterValues filter_from_vertex_values(const SimplicialComplex& k, const std::vector<Radius>& vertex_value) {
  FilterValues f;
  f.value.resize(static_cast<std::size_t>(std::max(k.top_dim() + 1, 0)));
  for (int d = 0; d <= k.top_dim(); ++d) {
    auto& vals = f.value[static_cast<std::size_t>(d)];
    vals.resize(k.count(d));
    for (std::size_t i = 0; i < k.count(d); ++i) {
      if (k.is_sealed(d, i)) {
        vals[i] = kInfRadius;
        continue;
      }
      Radius m = 0;
      for (VertexId v : k.simplex(d, i)) m = std::max(m, vertex_value[v]);
      vals[i] = m;
    }
  }
  return f;
}

inline FilterValues filter_from_vertex(const SimplicialComplex& k, VertexId p) {
  return filter_from_vertex_values(k, geodesic_distance(k, p));
}

inline SubcomplexMask sublevel_mask(const FilterValues& f, Radius r) {
  SubcomplexMask mask;
  mask.member.resize(f.value.size());
  for (std::size_t d = 0; d < f.value.size(); ++d) {
    mask.member[d].resize(f.value[d].size());
    for (std::size_t i = 0; i < f.value[d].size(); ++i) mask.member[d][i] = f.value[d][i] <= r;
  }
  return mask;
}

inline SubcomplexMask geodesic_ball(const SimplicialComplex& k, VertexId p, Radius r) {
  if (r < 0) throw PreconditionError("geodesic_ball: radius must be non-negative");
  SubcomplexMask mask = sublevel_mask(filter_from_vertex(k, p), r);
  mask.ball = BallProvenance{p, r};
  return mask;
}

inline SubcomplexMask full_mask(const SimplicialComplex& k) {
  SubcomplexMask mask;
  for (int d = 0; d <= k.top_dim(); ++d) mask.member.emplace_back(k.count(d), true);
  return mask;
}

inline SubcomplexMask empty_mask(const SimplicialComplex& k) {
  SubcomplexMask mask;
  for (int d = 0; d <= k.top_dim(); ++d) mask.member.emplace_back(k.count(d), false);
  return mask;
}

// Whether every face of every masked simplex is masked.
inline bool is_face_closed(const SimplicialComplex& k, const SubcomplexMask& mask) {
  for (int d = 1; d <= k.top_dim(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      if (!mask.contains(d, i)) continue;
      for (std::size_t f : k.boundary_matrix(d).columns[i].support)
        if (!mask.contains(d - 1, f)) return false;
    }
  return true;
}

// Vertices touched by a chain, ascending.
inline std::vector<VertexId> chain_vertices(const SimplicialComplex& k, const Chain& c) {
  std::vector<VertexId> out;
  for (std::size_t i : c.support.support) {
    const auto& s = k.simplex(c.dim, i);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace homloc
