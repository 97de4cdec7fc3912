#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "support.hpp"

using namespace homloc;
using testing_support::plain_rank;
using testing_support::random_matrix;

namespace {

SparseGF2Matrix cols(std::size_t rows, std::vector<std::vector<std::size_t>> c) {
  SparseGF2Matrix m(rows, 0);
  for (auto& s : c) m.append_column(GF2Vector(rows, std::move(s)));
  return m;
}

// Theta graph: vertices a=0, b=1, three paths of length 2 through 2, 3, 4.
SimplicialComplex theta() { return gen::make({{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}); }

}  // namespace

TEST(GF2Vector, RepeatedIndicesCancel) {
  GF2Vector v(5, {3, 1, 3, 3, 0, 0});
  EXPECT_EQ(v.support, (std::vector<std::size_t>{1, 3}));
  EXPECT_THROW(GF2Vector(2, {2}), DimensionMismatch);
}

TEST(GF2Vector, AdditionIsSymmetricDifference) {
  GF2Vector a(6, {0, 2, 4}), b(6, {2, 3});
  EXPECT_EQ((a + b).support, (std::vector<std::size_t>{0, 3, 4}));
  EXPECT_TRUE((a + a).empty());
  EXPECT_THROW(a += GF2Vector(5), DimensionMismatch);
}

TEST(RankDense, Examples) {
  EXPECT_EQ(rank_dense(SparseGF2Matrix::identity(3)), 3u);
  EXPECT_EQ(rank_dense(SparseGF2Matrix(4, 5)), 0u);
  EXPECT_EQ(rank_dense(cols(2, {{0}, {1}, {0, 1}})), 2u);
  EXPECT_EQ(rank_dense(SparseGF2Matrix(0, 3)), 0u);
}

TEST(RankDense, MatchesPlainEliminationAndTranspose) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 40, c = 1 + rng() % 40;
    const auto m = random_matrix(r, c, 0.15, rng);
    const auto rk = rank_dense(m);
    EXPECT_EQ(rk, plain_rank(m));
    EXPECT_EQ(rk, rank_dense(transpose(m)));
  }
}

TEST(SparseEchelon, RankMatchesDense) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(1 + rng() % 50, 1 + rng() % 50, 0.1, rng);
    SparseEchelon ech(m.rows);
    for (const auto& c : m.columns) ech.insert(c.support);
    EXPECT_EQ(ech.rank(), plain_rank(m));
  }
}

TEST(ColumnReduce, AlreadyReducedIsUnchanged) {
  const auto m = cols(4, {{0}, {0, 1}, {2, 3}});
  const auto red = column_reduce(m);
  EXPECT_EQ(red.reduced, m);
  EXPECT_EQ(red.ops, SparseGF2Matrix::identity(3));
}

TEST(ColumnReduce, HollowTriangleKernelIsTheCycle) {
  const auto k = gen::make(gen::hollow_triangle());
  const auto kernel = column_reduce(k.boundary_matrix(1)).kernel_basis();
  ASSERT_EQ(kernel.size(), 1u);
  EXPECT_EQ(kernel[0].support, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(ColumnReduce, ThetaGraphKernelDimension) {
  const auto k = theta();
  const auto& d1 = k.boundary_matrix(1);
  const std::size_t expected = d1.cols - plain_rank(d1);
  EXPECT_EQ(expected, 2u);
  EXPECT_EQ(column_reduce(d1).kernel_basis().size(), expected);
}

TEST(ColumnReduce, PreservesSpanAndKernelIsKernel) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(1 + rng() % 30, 1 + rng() % 30, 0.2, rng);
    const auto red = column_reduce(m);
    EXPECT_EQ(red.rank(), plain_rank(m));
    EXPECT_EQ(rank_dense(hconcat(m, red.reduced)), rank_dense(m));
    // Distinct lowest rows.
    std::vector<std::size_t> lows;
    for (const auto& c : red.reduced.columns)
      if (!c.empty()) lows.push_back(c.support.back());
    std::sort(lows.begin(), lows.end());
    EXPECT_EQ(std::adjacent_find(lows.begin(), lows.end()), lows.end());
    for (const auto& kv : red.kernel_basis()) EXPECT_TRUE(m.multiply(kv).empty());
    EXPECT_EQ(red.kernel_basis().size(), m.cols - red.rank());
  }
}

TEST(InSpan, Examples) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_matrix(20, 15, 0.2, rng);
    EXPECT_TRUE(in_span(m, m.columns[rng() % m.cols]));
    const std::size_t a = rng() % m.cols, b = rng() % m.cols;
    const GF2Vector v = m.columns[a] + m.columns[b];
    SparseGF2Matrix with = m;
    with.append_column(v);
    ASSERT_EQ(rank_dense(with), rank_dense(m));
    EXPECT_TRUE(in_span(m, v));
  }
  EXPECT_FALSE(in_span(SparseGF2Matrix(3, 2), GF2Vector(3, {0})));
  EXPECT_THROW(in_span(SparseGF2Matrix(3, 2), GF2Vector(4, {0})), DimensionMismatch);
}

TEST(InSpan, AgreesWithRankComparison) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(12, 1 + rng() % 10, 0.2, rng);
    const auto v = random_matrix(12, 1, 0.3, rng).columns[0];
    SparseGF2Matrix with = m;
    with.append_column(v);
    EXPECT_EQ(in_span(m, v), plain_rank(with) == plain_rank(m));
  }
}

TEST(RestrictRows, Examples) {
  const auto id = SparseGF2Matrix::identity(3);
  EXPECT_EQ(restrict_rows(id, {true, true, true}), id);
  const auto none = restrict_rows(id, {false, false, false});
  EXPECT_EQ(none.rows, 0u);
  EXPECT_EQ(none.cols, 3u);
  EXPECT_EQ(rank_dense(none), 0u);
  EXPECT_EQ(rank_dense(restrict_rows(id, {true, false, true})), 2u);
  EXPECT_THROW(restrict_rows(id, {true}), DimensionMismatch);
}

TEST(RestrictRows, RankIsMonotone) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(25, 20, 0.15, rng);
    std::vector<bool> keep(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) keep[i] = rng() % 3 != 0;
    EXPECT_LE(rank_dense(restrict_rows(m, keep)), rank_dense(m));
  }
}

TEST(EchelonBasis, SolveWitnessesMembership) {
  std::mt19937_64 rng(13);
  const auto m = random_matrix(30, 12, 0.2, rng);
  EchelonBasis ech(m.rows, true);
  for (const auto& c : m.columns) ech.insert(c);
  const GF2Vector v = m.columns[1] + m.columns[4] + m.columns[7];
  const auto ids = ech.solve(v);
  ASSERT_TRUE(ids.has_value());
  GF2Vector sum(m.rows);
  for (auto j : *ids) sum += m.columns[j];
  EXPECT_EQ(sum, v);
  EchelonBasis untracked(m.rows);
  EXPECT_THROW(untracked.solve(v), PreconditionError);
}

TEST(Triples, RoundTrip) {
  std::mt19937_64 rng(14);
  const auto m = random_matrix(9, 7, 0.3, rng);
  std::stringstream ss;
  write_triples(ss, m);
  EXPECT_EQ(read_triples(ss), m);
}

TEST(Triples, RejectsGarbage) {
  std::stringstream ss("3 3\n0 x\n");
  EXPECT_THROW(read_triples(ss), MalformedInput);
}
