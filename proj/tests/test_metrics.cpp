#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "rnametric/error.hpp"
#include "rnametric/metrics.hpp"
#include "rnametric/orbits.hpp"
#include "rnametric/oracles.hpp"
#include "test_util.hpp"

using namespace rnametric;
using rnametric::testing::compose_from_contacts;
using rnametric::testing::make;

namespace {

const auto kLinearA = make(7, {{1, 3}, {5, 7}});
const auto kLinearB = make(7, {{3, 5}});
const auto kCyclicA = make(6, {{1, 3}, {4, 6}});
const auto kCyclicB = make(6, {{1, 4}, {3, 6}});

}  // namespace

TEST(FixedCasesTest, OraclesConfirmFrozenValues) {
  // (1 3 7 5) plus three fixed points
  const auto lin = compose_from_contacts(kLinearA, kLinearB);
  EXPECT_EQ(lin, (oracles::Permutation{3, 2, 7, 4, 1, 6, 5}));
  EXPECT_EQ(oracles::cycle_count(lin), 4u);
  EXPECT_EQ(oracles::min_transpositions_bfs(lin), 3u);
  // (1 6)(3 4) plus fixed points 2, 5
  const auto cyc = compose_from_contacts(kCyclicA, kCyclicB);
  EXPECT_EQ(cyc, (oracles::Permutation{6, 2, 4, 3, 5, 1}));
  EXPECT_EQ(oracles::cycle_count(cyc), 4u);
  EXPECT_EQ(oracles::min_transpositions_bfs(cyc), 2u);
}

TEST(DInvTest, Examples) {
  EXPECT_EQ(d_inv(kLinearA, kLinearB), 3u);
  EXPECT_EQ(d_inv(kCyclicA, kCyclicB), 2u);
  EXPECT_EQ(d_inv(kCyclicA, kCyclicA), 0u);
  EXPECT_EQ(d_inv(make(5, {{2, 5}}), make(5, {})), 1u);
}

TEST(DInvCyclesTest, Examples) {
  EXPECT_EQ(d_inv_cycles(kLinearA, kLinearB), 3u);
  EXPECT_EQ(d_inv_cycles(kLinearA, kLinearA), 0u);
  EXPECT_EQ(d_inv_cycles(make(5, {{2, 5}}), make(5, {})), 1u);
  EXPECT_EQ(d_inv_cycles(kCyclicA, kCyclicB), 2u);
}

TEST(DSgrTest, Examples) {
  EXPECT_NEAR(d_sgr(kLinearA, kLinearB), 2.0794415416798357, 1e-12);
  EXPECT_EQ(d_sgr(kLinearA, kLinearA), 0.0);
  EXPECT_NEAR(d_sgr(make(5, {{1, 3}}), make(5, {})), 0.6931471805599453, 1e-12);
  EXPECT_EQ(d_sgr_log2(kLinearA, kLinearB), 3u);
  EXPECT_EQ(d_sgr_log2(kLinearA, kLinearA), 0u);
  EXPECT_EQ(d_sgr_log2(make(5, {{1, 3}}), make(5, {})), 1u);
  EXPECT_EQ(d_sgr_log2(kCyclicA, kCyclicB), 4u);
}

TEST(SubgroupOrdersTest, Examples) {
  EXPECT_EQ(subgroup_orders(kLinearA, kLinearB), (SubgroupOrders{2, 1, 0, 3}));
  EXPECT_EQ(subgroup_orders(make(5, {{2, 5}}), make(5, {{2, 5}})), (SubgroupOrders{1, 1, 1, 1}));
  EXPECT_EQ(subgroup_orders(make(5, {}), make(5, {})), (SubgroupOrders{0, 0, 0, 0}));
}

// Brute force on tiny inputs: materialize G(Γ) as a set of permutations and
// count the intersection and product directly.
TEST(SubgroupOrdersTest, MaterializedGroupsAgree) {
  for (Index n : {4, 5, 6}) {
    const auto all = oracles::enumerate_structures(n);
    auto group = [n](const SecondaryStructure& s) {
      std::set<oracles::Permutation> g;
      const auto k = s.num_contacts();
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        oracles::Permutation p(static_cast<std::size_t>(n));
        for (Index j = 1; j <= n; ++j) p[j - 1] = j;
        for (std::size_t t = 0; t < k; ++t)
          if (mask >> t & 1) std::swap(p[s.contacts()[t].i - 1], p[s.contacts()[t].j - 1]);
        g.insert(p);
      }
      return g;
    };
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto ga = group(a), gb = group(b);
        std::set<oracles::Permutation> meet, prod;
        for (const auto& x : ga) {
          if (gb.count(x)) meet.insert(x);
          for (const auto& y : gb) {
            oracles::Permutation xy(x.size());
            for (std::size_t j = 0; j < x.size(); ++j) xy[j] = x[y[j] - 1];
            prod.insert(xy);
          }
        }
        const auto o = subgroup_orders(a, b);
        EXPECT_EQ(std::size_t{1} << o.log2_g1, ga.size());
        EXPECT_EQ(std::size_t{1} << o.log2_g2, gb.size());
        EXPECT_EQ(std::size_t{1} << o.log2_intersection, meet.size());
        EXPECT_EQ(std::size_t{1} << o.log2_product, prod.size());
        EXPECT_EQ(std::size_t{1} << d_sgr_log2(a, b), prod.size() / meet.size());
      }
    }
  }
}

TEST(DMagTest, Examples) {
  EXPECT_EQ(d_mag(kLinearA, kLinearA), 0u);
  EXPECT_EQ(d_mag(kCyclicA, kCyclicB), 2u);
  EXPECT_EQ(d_mag(kLinearA, kLinearB), 3u);
}

TEST(MetricsTest, LengthMismatch) {
  const auto a = make(5, {}), b = make(6, {});
  for (auto m : {Metric::Inv, Metric::Sgr, Metric::Sgr2, Metric::Mag}) {
    try {
      distance(m, a, b);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
    }
  }
  EXPECT_THROW(d_inv_cycles(a, b), Error);
  EXPECT_THROW(subgroup_orders(a, b), Error);
}

TEST(MetricsTest, DispatchAndFormat) {
  EXPECT_EQ(parse_metric("sgr2"), Metric::Sgr2);
  EXPECT_THROW(parse_metric("norm"), Error);
  EXPECT_EQ(format_distance(Metric::Inv, distance(Metric::Inv, kLinearA, kLinearB)), "3");
  EXPECT_EQ(format_distance(Metric::Sgr, distance(Metric::Sgr, kLinearA, kLinearB)), "2.079441542");
  EXPECT_EQ(format_distance(Metric::Mag, distance(Metric::Mag, kCyclicA, kCyclicB)), "2");
}

TEST(MetricsPropertyTest, PathsAgreeAndBounds) {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const Index n = 1 + static_cast<Index>(rng.below(40));
    auto a = rnametric::testing::random_any(n, rng);
    auto b = rnametric::testing::random_any(n, rng);
    const auto inv = d_inv(a, b);
    const auto sd = symmetric_difference_size(a, b);
    const auto omega = decompose_orbits(a, b).omega;
    EXPECT_EQ(inv, d_inv_cycles(a, b));
    EXPECT_EQ(inv, d_mag(a, b));
    EXPECT_EQ(inv % 2, sd % 2);
    EXPECT_LE(inv, sd);
    EXPECT_EQ(inv == sd, omega == 0);
    const auto o = subgroup_orders(a, b);
    EXPECT_EQ(d_sgr_log2(a, b), o.log2_g1 + o.log2_g2 - 2 * o.log2_intersection);
    EXPECT_LE(o.log2_intersection, std::min(o.log2_g1, o.log2_g2));
    EXPECT_EQ(d_sgr_log2(a, b), sd);
    EXPECT_NEAR(d_sgr(a, b), std::numbers::ln2 * static_cast<double>(sd), 1e-12 * (1.0 + sd));
  }
}
