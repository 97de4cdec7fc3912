#pragma once

// Randomized black-box rank over GF(2).
//
// The Krylov sequence is evaluated in the extension field GF(2^64) so that
// random preconditioners succeed with overwhelming probability. For an m x n
// matrix A (transposed first so that n <= m) we iterate
//
//     B = D1 * A^T * D2 * A * D1
//
// with random nonsingular diagonals D1, D2. B has the rank of A, and the
// degree of its minimal polynomial exceeds that rank by one when B is
// singular. The minimal polynomial of the projected sequence u^T B^i v is
// recovered by Berlekamp-Massey. Every failure mode shrinks the recovered
// polynomial, so the estimate never exceeds the true rank.

#include <cstdint>
#include <random>
#include <vector>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define HOMLOC_HAVE_X86 1
#endif

#include "homloc/gf2.hpp"

namespace homloc {

namespace gf64 {

using Element = std::uint64_t;

// x^64 + x^4 + x^3 + x + 1
inline constexpr std::uint64_t kReductionTail = 0x1B;

struct Wide {
  std::uint64_t lo;
  std::uint64_t hi;

  friend bool operator==(const Wide&, const Wide&) = default;
};

inline Wide clmul_portable(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t lo = 0, hi = 0;
  for (int i = 0; i < 64; ++i) {
    if ((b >> i) & 1U) {
      lo ^= a << i;
      if (i != 0) hi ^= a >> (64 - i);
    }
  }
  return {lo, hi};
}

#ifdef HOMLOC_HAVE_X86
__attribute__((target("pclmul,sse2"))) inline Wide clmul_hw(std::uint64_t a, std::uint64_t b) noexcept {
  const __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
  const __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
  const __m128i r = _mm_clmulepi64_si128(va, vb, 0x00);
  return {static_cast<std::uint64_t>(_mm_cvtsi128_si64(r)),
          static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)))};
}

inline bool have_pclmul() noexcept {
  static const bool ok = __builtin_cpu_supports("pclmul");
  return ok;
}
#else
inline bool have_pclmul() noexcept { return false; }
#endif

inline Wide clmul(std::uint64_t a, std::uint64_t b) noexcept {
#ifdef HOMLOC_HAVE_X86
  if (have_pclmul()) return clmul_hw(a, b);
#endif
  return clmul_portable(a, b);
}

// Multiplies a 64-bit polynomial by the reduction tail, split into words.
inline Wide mul_tail(std::uint64_t h) noexcept {
  return {h ^ (h << 1) ^ (h << 3) ^ (h << 4), (h >> 63) ^ (h >> 61) ^ (h >> 60)};
}

inline Element reduce(Wide w) noexcept {
  const Wide t = mul_tail(w.hi);
  return w.lo ^ t.lo ^ mul_tail(t.hi).lo;
}

inline Element mul(Element a, Element b) noexcept { return reduce(clmul(a, b)); }

inline Element pow(Element a, std::uint64_t e) noexcept {
  Element r = 1;
  while (e != 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

// a^(2^64 - 2); a must be nonzero.
inline Element inv(Element a) noexcept { return pow(a, ~std::uint64_t{0} - 1); }

}  // namespace gf64

// Connection polynomial C (C[0] = 1) and linear complexity L of a sequence.
struct LinearRecurrence {
  std::vector<gf64::Element> connection;
  std::size_t complexity = 0;

  // Constant term of the minimal polynomial x^L * C(1/x).
  gf64::Element minpoly_constant() const {
    return complexity < connection.size() ? connection[complexity] : 0;
  }
};

inline LinearRecurrence berlekamp_massey(const std::vector<gf64::Element>& s) {
  using namespace gf64;
  std::vector<Element> c{1}, b{1};
  std::size_t l = 0, m = 1;
  Element last = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    Element d = s[n];
    for (std::size_t i = 1; i <= l && i < c.size(); ++i) d ^= mul(c[i], s[n - i]);
    if (d == 0) {
      ++m;
      continue;
    }
    const Element coef = mul(d, inv(last));
    std::vector<Element> prev = c;
    if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + m] ^= mul(coef, b[i]);
    if (2 * l <= n) {
      l = n + 1 - l;
      b = std::move(prev);
      last = d;
      m = 1;
    } else {
      ++m;
    }
  }
  c.resize(std::max(c.size(), l + 1), 0);
  return {std::move(c), l};
}

namespace detail {

// Drops zero rows and columns; rank is unchanged.
inline SparseGF2Matrix compact(const SparseGF2Matrix& m) {
  std::vector<bool> used(m.rows, false);
  SparseGF2Matrix out;
  for (const auto& c : m.columns)
    for (std::size_t i : c.support) used[i] = true;
  std::vector<std::size_t> index(m.rows, 0);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < m.rows; ++i)
    if (used[i]) index[i] = kept++;
  out.rows = kept;
  for (const auto& c : m.columns) {
    if (c.empty()) continue;
    GF2Vector v(kept);
    v.support.reserve(c.support.size());
    for (std::size_t i : c.support) v.support.push_back(index[i]);
    out.append_column(std::move(v));
  }
  return out;
}

inline gf64::Element nonzero(std::mt19937_64& rng) {
  gf64::Element x = 0;
  while (x == 0) x = rng();
  return x;
}

inline std::size_t wiedemann_trial(const SparseGF2Matrix& a, std::mt19937_64& rng) {
  using namespace gf64;
  const std::size_t n = a.cols;
  const std::size_t m = a.rows;
  std::vector<Element> d1(n), d2(m), u(n), x(n), y(m);
  for (auto& e : d1) e = nonzero(rng);
  for (auto& e : d2) e = nonzero(rng);
  for (auto& e : u) e = rng();
  for (auto& e : x) e = rng();

  std::vector<Element> seq;
  seq.reserve(2 * n + 2);
  for (std::size_t step = 0; step < 2 * n + 2; ++step) {
    Element dot = 0;
    for (std::size_t j = 0; j < n; ++j) dot ^= mul(u[j], x[j]);
    seq.push_back(dot);
    // x <- D1 A^T D2 A D1 x
    std::fill(y.begin(), y.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = mul(d1[j], x[j]);
      for (std::size_t i : a.columns[j].support) y[i] ^= v;
    }
    for (std::size_t i = 0; i < m; ++i) y[i] = mul(d2[i], y[i]);
    for (std::size_t j = 0; j < n; ++j) {
      Element acc = 0;
      for (std::size_t i : a.columns[j].support) acc ^= y[i];
      x[j] = mul(d1[j], acc);
    }
  }
  const LinearRecurrence rec = berlekamp_massey(seq);
  if (rec.complexity == 0) return 0;
  return rec.minpoly_constant() == 0 ? rec.complexity - 1 : rec.complexity;
}

}  // namespace detail

// Rank estimate: the maximum over independent preconditionings. Never
// exceeds the true rank.
inline std::size_t rank_wiedemann(const SparseGF2Matrix& m, int confidence_trials, std::uint64_t rng_seed) {
  if (confidence_trials < 1) throw PreconditionError("rank_wiedemann: confidence_trials must be >= 1");
  SparseGF2Matrix a = detail::compact(m);
  if (a.cols > a.rows) a = transpose(a);
  if (a.cols == 0) return 0;
  std::mt19937_64 rng(rng_seed);
  std::size_t best = 0;
  for (int t = 0; t < confidence_trials && best < a.cols; ++t)
    best = std::max(best, detail::wiedemann_trial(a, rng));
  return best;
}

struct LinalgConfig {
  int wiedemann_trials = 4;
  std::uint64_t seed = 0;
  // Matrices with rows + cols at or below this size use exact elimination.
  std::size_t dense_threshold = 16384;

  bool use_dense(const SparseGF2Matrix& m) const { return m.rows + m.cols <= dense_threshold; }
};

inline std::size_t rank(const SparseGF2Matrix& m, const LinalgConfig& cfg) {
  return cfg.use_dense(m) ? rank_dense(m) : rank_wiedemann(m, cfg.wiedemann_trials, cfg.seed);
}

// Whether v lies in the column span of M. Always decided exactly: a
// one-sided rank estimate cannot certify either answer.
inline bool in_span(const SparseGF2Matrix& m, const GF2Vector& v) {
  if (v.length != m.rows) throw DimensionMismatch("in_span: vector length differs from row count");
  if (v.empty()) return true;
  EchelonBasis basis(m.rows);
  for (const auto& c : m.columns) basis.insert(c);
  return basis.in_span(v);
}

}  // namespace homloc
