#pragma once

// Sparse linear algebra over the two-element field.
//
// Vectors are stored as sorted supports; matrices as a sequence of sparse
// columns. Exact elimination runs on bit-packed columns (EchelonBasis).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "homloc/common.hpp"

namespace homloc {

struct GF2Vector {
  std::size_t length = 0;
  std::vector<std::size_t> support;  // strictly ascending, each < length

  GF2Vector() = default;
  explicit GF2Vector(std::size_t n) : length(n) {}
  GF2Vector(std::size_t n, std::vector<std::size_t> s) : length(n), support(std::move(s)) {
    std::sort(support.begin(), support.end());
    // Repeated indices cancel pairwise.
    std::vector<std::size_t> out;
    out.reserve(support.size());
    for (std::size_t i = 0; i < support.size();) {
      std::size_t j = i;
      while (j < support.size() && support[j] == support[i]) ++j;
      if ((j - i) % 2 == 1) out.push_back(support[i]);
      i = j;
    }
    support = std::move(out);
    if (!support.empty() && support.back() >= length)
      throw DimensionMismatch("GF2Vector: index out of range");
  }

  bool empty() const noexcept { return support.empty(); }
  std::size_t weight() const noexcept { return support.size(); }
  bool test(std::size_t i) const { return std::binary_search(support.begin(), support.end(), i); }

  // In-place symmetric difference.
  GF2Vector& operator+=(const GF2Vector& other) {
    if (other.length != length) throw DimensionMismatch("GF2Vector: length mismatch");
    std::vector<std::size_t> out;
    out.reserve(support.size() + other.support.size());
    std::set_symmetric_difference(support.begin(), support.end(), other.support.begin(),
                                  other.support.end(), std::back_inserter(out));
    support = std::move(out);
    return *this;
  }

  friend GF2Vector operator+(GF2Vector a, const GF2Vector& b) { return a += b; }
  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
};

struct SparseGF2Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<GF2Vector> columns;

  SparseGF2Matrix() = default;
  SparseGF2Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c, GF2Vector(r)) {}

  static SparseGF2Matrix identity(std::size_t n) {
    SparseGF2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns[i].support = {i};
    return m;
  }

  static SparseGF2Matrix from_columns(std::size_t rows, std::vector<GF2Vector> cols) {
    SparseGF2Matrix m;
    m.rows = rows;
    m.cols = cols.size();
    for (const auto& c : cols)
      if (c.length != rows) throw DimensionMismatch("column length differs from row count");
    m.columns = std::move(cols);
    return m;
  }

  std::size_t nonzeros() const noexcept {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.weight();
    return n;
  }

  void append_column(GF2Vector v) {
    if (v.length != rows) throw DimensionMismatch("append_column: length mismatch");
    columns.push_back(std::move(v));
    ++cols;
  }

  // M * x, where x is a GF(2) vector over the columns.
  GF2Vector multiply(const GF2Vector& x) const {
    if (x.length != cols) throw DimensionMismatch("multiply: length mismatch");
    std::vector<std::size_t> acc;
    for (std::size_t j : x.support) acc.insert(acc.end(), columns[j].support.begin(), columns[j].support.end());
    return GF2Vector(rows, std::move(acc));
  }

  friend bool operator==(const SparseGF2Matrix&, const SparseGF2Matrix&) = default;
};

// Column bitset used by exact elimination.
class BitColumn {
 public:
  BitColumn() = default;
  explicit BitColumn(std::size_t n) : bits_((n + 63) / 64, 0) {}
  BitColumn(std::size_t n, std::span<const std::size_t> support) : BitColumn(n) {
    for (std::size_t i : support) set(i);
  }

  void set(std::size_t i) { bits_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { bits_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (bits_[i / 64] >> (i % 64)) & 1U; }

  // Lowest set bit at or after word `from_word`, or npos.
  std::size_t lowest(std::size_t from_word = 0) const {
    for (std::size_t w = from_word; w < bits_.size(); ++w)
      if (bits_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits_[w]));
    return npos;
  }

  void xor_with(const BitColumn& other, std::size_t from_word = 0) {
    for (std::size_t w = from_word; w < bits_.size(); ++w) bits_[w] ^= other.bits_[w];
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> bits_;
};

// Incrementally maintained echelon form of a set of vectors in GF(2)^rows.
// Every stored vector has a distinct lowest set bit (its pivot). When
// tracking is enabled each stored vector remembers which inserted inputs
// (by insertion id) sum to it, so span membership can be witnessed.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t rows, bool track = false)
      : rows_(rows), track_(track), pivot_of_row_(rows, kNone) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  // Inserts v; returns true if it was independent of everything so far.
  bool insert(std::span<const std::size_t> support) {
    const std::size_t id = inserted_++;
    BitColumn v(rows_, support);
    BitColumn combo;
    if (track_) {
      combo = BitColumn(id + 1);
      combo.set(id);
    }
    if (!reduce(v, track_ ? &combo : nullptr)) return false;
    const std::size_t pivot = v.lowest();
    pivot_of_row_[pivot] = basis_.size();
    basis_.push_back(std::move(v));
    if (track_) combos_.push_back(std::move(combo));
    return true;
  }

  bool insert(const GF2Vector& v) {
    if (v.length != rows_) throw DimensionMismatch("EchelonBasis::insert: length mismatch");
    return insert(std::span<const std::size_t>(v.support));
  }

  bool in_span(const GF2Vector& v) const {
    if (v.length != rows_) throw DimensionMismatch("EchelonBasis::in_span: length mismatch");
    BitColumn b(rows_, v.support);
    return !reduce(b, nullptr);
  }

  // If v lies in the span, returns the ids of inserted vectors summing to v.
  std::optional<std::vector<std::size_t>> solve(const GF2Vector& v) const {
    if (!track_) throw PreconditionError("EchelonBasis::solve requires tracking");
    if (v.length != rows_) throw DimensionMismatch("EchelonBasis::solve: length mismatch");
    BitColumn b(rows_, v.support);
    BitColumn combo(inserted_);
    if (reduce(b, &combo)) return std::nullopt;
    return combo.support();
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Reduces v against the basis; returns true if a nonzero remainder is left.
  bool reduce(BitColumn& v, BitColumn* combo) const {
    std::size_t low = v.lowest();
    while (low != BitColumn::npos) {
      const std::size_t k = pivot_of_row_[low];
      if (k == kNone) return true;
      v.xor_with(basis_[k], low / 64);
      if (combo != nullptr) xor_combo(*combo, combos_[k]);
      low = v.lowest(low / 64);
    }
    return false;
  }

  static void xor_combo(BitColumn& dst, const BitColumn& src) {
    for (std::size_t i : src.support()) dst.flip(i);
  }

  std::size_t rows_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<BitColumn> basis_;
  std::vector<BitColumn> combos_;
};

// Exact rank by Gaussian elimination on bit-packed columns.
inline std::size_t rank_dense(const SparseGF2Matrix& m) {
  EchelonBasis basis(m.rows);
  for (const auto& c : m.columns) {
    basis.insert(c);
    if (basis.rank() == m.rows) break;
  }
  return basis.rank();
}

inline SparseGF2Matrix transpose(const SparseGF2Matrix& m) {
  std::vector<std::vector<std::size_t>> rows(m.rows);
  for (std::size_t j = 0; j < m.cols; ++j)
    for (std::size_t i : m.columns[j].support) rows[i].push_back(j);
  SparseGF2Matrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) t.columns[i].support = std::move(rows[i]);
  return t;
}

// Keeps the rows flagged in `keep`, preserving their order.
inline SparseGF2Matrix restrict_rows(const SparseGF2Matrix& m, const std::vector<bool>& keep) {
  if (keep.size() != m.rows) throw DimensionMismatch("restrict_rows: mask length differs from row count");
  std::vector<std::size_t> new_index(m.rows, 0);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < m.rows; ++i)
    if (keep[i]) new_index[i] = kept++;
  SparseGF2Matrix out(kept, m.cols);
  for (std::size_t j = 0; j < m.cols; ++j) {
    auto& dst = out.columns[j].support;
    for (std::size_t i : m.columns[j].support)
      if (keep[i]) dst.push_back(new_index[i]);
  }
  return out;
}

inline GF2Vector restrict_vector(const GF2Vector& v, const std::vector<bool>& keep) {
  if (keep.size() != v.length) throw DimensionMismatch("restrict_vector: mask length differs");
  std::size_t kept = 0;
  std::vector<std::size_t> new_index(v.length, 0);
  for (std::size_t i = 0; i < v.length; ++i)
    if (keep[i]) new_index[i] = kept++;
  GF2Vector out(kept);
  for (std::size_t i : v.support)
    if (keep[i]) out.support.push_back(new_index[i]);
  return out;
}

// Sparse elimination by lowest row, without bit packing. Cheaper than
// EchelonBasis when columns stay short, as boundary columns mostly do.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t rows) : owner_(rows, kNone) {}

  std::size_t rank() const noexcept { return basis_.size(); }

  // Takes a sorted support; returns true if it was independent.
  bool insert(std::vector<std::size_t> col) {
    while (!col.empty()) {
      const std::size_t k = owner_[col.back()];
      if (k == kNone) {
        owner_[col.back()] = basis_.size();
        basis_.push_back(std::move(col));
        return true;
      }
      scratch_.clear();
      std::set_symmetric_difference(col.begin(), col.end(), basis_[k].begin(), basis_[k].end(),
                                    std::back_inserter(scratch_));
      col.swap(scratch_);
    }
    return false;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner_;
  std::vector<std::vector<std::size_t>> basis_;
  std::vector<std::size_t> scratch_;
};

struct ColumnReduction {
  SparseGF2Matrix reduced;
  // ops.columns[j] lists the original columns summed into reduced column j.
  SparseGF2Matrix ops;

  // Combinations whose image is zero: a basis of the kernel of M, in column order.
  std::vector<GF2Vector> kernel_basis() const {
    std::vector<GF2Vector> out;
    for (std::size_t j = 0; j < reduced.cols; ++j)
      if (reduced.columns[j].empty()) out.push_back(ops.columns[j]);
    return out;
  }

  std::size_t rank() const {
    return static_cast<std::size_t>(std::count_if(reduced.columns.begin(), reduced.columns.end(),
                                                  [](const GF2Vector& c) { return !c.empty(); }));
  }
};

// Left-to-right reduction by lowest row index: a column is added the
// earliest column sharing its lowest nonzero row until its low is unique.
inline ColumnReduction column_reduce(const SparseGF2Matrix& m) {
  ColumnReduction out{m, SparseGF2Matrix::identity(m.cols)};
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(m.rows, kNone);
  for (std::size_t j = 0; j < m.cols; ++j) {
    auto& col = out.reduced.columns[j];
    while (!col.empty()) {
      const std::size_t low = col.support.back();
      const std::size_t k = owner[low];
      if (k == kNone) {
        owner[low] = j;
        break;
      }
      col += out.reduced.columns[k];
      out.ops.columns[j] += out.ops.columns[k];
    }
  }
  return out;
}

inline SparseGF2Matrix hconcat(const SparseGF2Matrix& a, const SparseGF2Matrix& b) {
  if (a.rows != b.rows) throw DimensionMismatch("hconcat: row counts differ");
  SparseGF2Matrix out = a;
  for (const auto& c : b.columns) out.append_column(c);
  return out;
}

// Debug dump: a header line `rows cols`, then one `row col` pair per nonzero.
inline void write_triples(std::ostream& os, const SparseGF2Matrix& m) {
  os << m.rows << ' ' << m.cols << '\n';
  for (std::size_t j = 0; j < m.cols; ++j)
    for (std::size_t i : m.columns[j].support) os << i << ' ' << j << '\n';
}

inline SparseGF2Matrix read_triples(std::istream& is) {
  std::size_t rows = 0, cols = 0;
  if (!(is >> rows >> cols)) throw MalformedInput("triples: missing header");
  std::vector<std::vector<std::size_t>> entries(cols);
  std::size_t i = 0, j = 0;
  while (is >> i >> j) {
    if (i >= rows || j >= cols) throw MalformedInput("triples: entry out of range");
    entries[j].push_back(i);
  }
  if (!is.eof()) throw MalformedInput("triples: malformed entry");
  SparseGF2Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) m.columns[c] = GF2Vector(rows, std::move(entries[c]));
  return m;
}

}  // namespace homloc
