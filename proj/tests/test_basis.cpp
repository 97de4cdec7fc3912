#include <gtest/gtest.h>

#include "support.hpp"

using namespace homloc;
using testing_support::plain_betti;
using testing_support::plain_rank;

namespace {

std::vector<Radius> sizes(const BasisResult& b) {
  std::vector<Radius> out;
  for (const auto& e : b.entries) out.push_back(e.size);
  return out;
}

bool nonbounding_in(const SimplicialComplex& k, const Chain& z) {
  SparseGF2Matrix up = k.boundary_matrix(z.dim + 1);
  const auto base = plain_rank(up);
  up.append_column(GF2Vector(k.count(z.dim), z.support.support));
  return plain_rank(up) > base;
}

}  // namespace

TEST(MeasureAll, HollowTriangle) {
  const auto k = gen::make(gen::hollow_triangle());
  const auto res = measure_all(k, 1);
  ASSERT_EQ(res.entries.size(), 1u);
  EXPECT_EQ(res.entries[0].size, 1);
  EXPECT_EQ(res.entries[0].cycle.support.support, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(total_size(res), 1);
}

TEST(MeasureAll, EmptyWhenNoClass) {
  const auto res = measure_all(gen::make(gen::filled_triangle()), 1);
  EXPECT_TRUE(res.entries.empty());
  EXPECT_EQ(total_size(res), 0);
  EXPECT_EQ(total_size(BasisResult{}), 0);
}

TEST(MeasureAll, TwoCyclesJoined) {
  const auto k = gen::make(gen::two_cycles_joined());
  for (Engine e : {Engine::naive, Engine::fast}) {
    EngineConfig cfg;
    cfg.engine = e;
    const auto res = measure_all(k, 1, cfg);
    EXPECT_EQ(sizes(res), (std::vector<Radius>{2, 4}));
    EXPECT_EQ(total_size(res), 6);
    EXPECT_EQ(res.entries[0].cycle.support.weight(), 4u);
  }
}

TEST(MeasureAll, DiskWithThreeHoles) {
  const auto k = gen::make(gen::disk_with_three_holes());
  const auto res = measure_all(k, 1);
  ASSERT_EQ(res.entries.size(), 3u);
  const auto s = sizes(res);
  EXPECT_EQ(s[0], s[1]);
  EXPECT_LT(s[1], s[2]);
  const auto oracle = oracle::naive_greedy_basis(k, 1);
  EXPECT_EQ(sizes(oracle), s);
}

TEST(MeasureAll, SizesNonDecreasingAndCyclesIndependent) {
  std::vector<SimplicialComplex> ks{gen::make(gen::torus7()), gen::make(gen::three_circles()),
                                    gen::make(gen::disk_with_three_holes()),
                                    gen::make(gen::torus_with_tail(5, 5, 2).raw)};
  for (std::uint64_t s = 0; s < 6; ++s) ks.push_back(gen::make(gen::random_complex(12, 0.3, 0.4, 4100 + s)));
  for (const auto& k : ks) {
    const auto res = measure_all(k, 1);
    ASSERT_EQ(res.entries.size(), betti(k, 1));
    const auto s = sizes(res);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    SparseGF2Matrix m = k.boundary_matrix(2);
    const auto base = plain_rank(m);
    for (const auto& e : res.entries) {
      EXPECT_EQ(e.cycle.support.length, k.count(1));
      EXPECT_TRUE(k.is_cycle(e.cycle));
      m.append_column(e.cycle.support);
    }
    EXPECT_EQ(plain_rank(m), base + res.entries.size());
  }
}

TEST(MeasureAll, SecondDimension) {
  const auto tet = gen::make(gen::tetrahedron_boundary());
  const auto res = measure_all(tet, 2);
  ASSERT_EQ(res.entries.size(), 1u);
  EXPECT_EQ(res.entries[0].size, 1);
  const auto tail = gen::make(gen::torus_with_tail(6, 6, 4).raw);
  const auto r2 = measure_all(tail, 2);
  EXPECT_EQ(r2.entries.size(), 1u);
  EXPECT_THROW(measure_all(gen::make(gen::hollow_triangle()), 0), PreconditionError);
}

// Replays the sealing rounds: beta drops by one each time and earlier
// cycles stay nonbounding in the sealed complex.
TEST(MeasureAll, EveryRoundDropsBettiByOne) {
  std::vector<SimplicialComplex> ks{gen::make(gen::two_cycles_joined()), gen::make(gen::three_circles()),
                                    gen::make(gen::disk_with_three_holes()), gen::make(gen::torus7())};
  for (const auto& k : ks) {
    const auto res = measure_all(k, 1);
    ASSERT_EQ(res.audit.size(), res.entries.size());
    SimplicialComplex current = k;
    for (std::size_t i = 0; i < res.entries.size(); ++i) {
      EXPECT_EQ(res.audit[i].betti, plain_betti(current, 1));
      EXPECT_EQ(res.audit[i].simplices, current.size());
      const Chain lifted{1, GF2Vector(current.count(1), res.entries[i].cycle.support.support)};
      const std::size_t before = plain_betti(current, 1);
      current = seal_cycle(current, lifted);
      EXPECT_EQ(plain_betti(current, 1) + 1, before);
      for (std::size_t j = i + 1; j < res.entries.size(); ++j) {
        const Chain later{1, GF2Vector(current.count(1), res.entries[j].cycle.support.support)};
        EXPECT_TRUE(nonbounding_in(current, later));
      }
    }
    EXPECT_EQ(plain_betti(current, 1), 0u);
  }
}

TEST(Sealing, NonSmallestClassInDisjointCycles) {
  // Sealing z1 + z2 in two disjoint cycles cones both at one apex: the
  // apex joins the two components, so beta_1 falls by two.
  const auto k = gen::make(gen::two_disjoint_cycles());
  ASSERT_EQ(plain_betti(k, 1), 2u);
  std::vector<std::size_t> all(k.count(1));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto sealed = seal_cycle(k, k.make_chain(1, all));
  EXPECT_EQ(plain_betti(sealed, 1), 0u);
  EXPECT_NE(plain_betti(k, 1) - plain_betti(sealed, 1), 1u);
}

TEST(Sealing, NonSmallestClassThroughTheBridge) {
  // With the bridge, coning z1 + z2 kills both old classes but closes a new
  // loop: apex, z1, bridge, z2, apex.
  const auto k = gen::make(gen::two_cycles_joined());
  std::vector<std::size_t> both;
  for (std::size_t i = 0; i < 12; ++i) both.push_back(i);
  const Chain sum = k.make_chain(1, both);
  ASSERT_TRUE(k.is_cycle(sum));
  const auto sealed = seal_cycle(k, sum);
  EXPECT_EQ(plain_betti(sealed, 1), 1u);
  const Chain z1{1, GF2Vector(sealed.count(1), {0, 1, 2, 3})};
  const Chain z2{1, GF2Vector(sealed.count(1), {4, 5, 6, 7, 8, 9, 10, 11})};
  EXPECT_FALSE(nonbounding_in(sealed, z1));
  EXPECT_FALSE(nonbounding_in(sealed, z2));
  // The surviving class is not carried by the original complex.
  const auto nb = precompute_nonbounding_basis(sealed, 1);
  for (const auto& c : nb.h_hat.columns) {
    bool uses_new = false;
    for (std::size_t i : c.support) uses_new = uses_new || sealed.is_sealed(1, i);
    EXPECT_TRUE(uses_new);
  }
  // Sealing the smallest class instead drops beta by exactly one.
  const auto good = seal_cycle(k, k.make_chain(1, {0, 1, 2, 3}));
  EXPECT_EQ(plain_betti(good, 1), 1u);
  EXPECT_TRUE(nonbounding_in(good, Chain{1, GF2Vector(good.count(1), {4, 5, 6, 7, 8, 9, 10, 11})}));
}
