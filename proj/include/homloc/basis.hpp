#pragma once

// Optimal homology basis by repeatedly measuring the smallest class and
// sealing its localized cycle.

#include <numeric>
#include <vector>

#include "homloc/smallest.hpp"

namespace homloc {

struct BasisEntry {
  Radius size = 0;
  Chain cycle;  // a cycle of the input complex
  VertexId center = 0;
};

struct RoundAudit {
  std::size_t simplices = 0;  // size of the complex measured in this round
  std::size_t betti = 0;      // its beta_d
};

struct BasisResult {
  int dim = 0;
  std::vector<BasisEntry> entries;  // sizes non-decreasing
  std::vector<RoundAudit> audit;
};

inline Radius total_size(const BasisResult& result) {
  return std::accumulate(result.entries.begin(), result.entries.end(), Radius{0},
                         [](Radius acc, const BasisEntry& e) { return acc + e.size; });
}

// Runs beta_d rounds on the original complex. After every round the sealed
// complex must have lost exactly one Betti number; anything else is an error.
inline BasisResult measure_all(const SimplicialComplex& k, int d, const EngineConfig& cfg = {}) {
  BasisResult out;
  out.dim = d;
  const std::size_t beta = betti(k, d);
  if (beta == 0) return out;
  if (d < 1) throw PreconditionError("measure_all: dimension must be >= 1");

  SimplicialComplex current = k;
  std::size_t current_beta = beta;
  for (std::size_t round = 0; round < beta; ++round) {
    out.audit.push_back({current.size(), current_beta});
    SmallestClassResult smallest = measure_smallest(current, d, cfg);
    for (std::size_t i : smallest.cycle.support.support)
      if (i >= k.count(d)) throw Error("measure_all: localized cycle uses a sealed simplex");

    Chain original = k.make_chain(d, smallest.cycle.support.support);
    out.entries.push_back({smallest.size, std::move(original), smallest.center});
    current = seal_cycle(current, smallest.cycle);
    const std::size_t next_beta = betti(current, d);
    if (next_beta + 1 != current_beta)
      throw Error("measure_all: sealing changed beta_d by other than one");
    current_beta = next_beta;
  }
  return out;
}

}  // namespace homloc
