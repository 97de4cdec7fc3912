#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace homloc {

using VertexId = std::uint32_t;

// Geodesic radii and filter values. kInfRadius is the sentinel carried by
// unreachable vertices and by every simplex added when sealing a cycle.
using Radius = std::int64_t;
inline constexpr Radius kInfRadius = std::numeric_limits<Radius>::max();

inline constexpr bool is_finite(Radius r) noexcept { return r != kInfRadius; }

// Saturating addition: anything plus INF stays INF.
inline constexpr Radius add_radius(Radius a, Radius b) noexcept {
  if (a == kInfRadius || b == kInfRadius) return kInfRadius;
  return a + b;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that does not describe a valid complex or file.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// The requested dimension has no nontrivial homology class.
class NoClassError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would exceed its configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace homloc
