// Copyright 2026 The seedprice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "seedprice/cascade.h"
#include "seedprice/error.h"
#include "testing/fixtures.h"
#include "testing/oracle.h"

namespace seedprice {
namespace {

using testing::fig1;
using testing::ids;
using testing::names;

TEST(Cascade, SingleSeedAtSixSpreadsToThreeBuyers) {
  const auto net = fig1();
  const CascadeResult r = run_cascade(net, 6, ids(net, "d"));
  EXPECT_EQ(names(net, r.adopters), "a,b,c,d");
  EXPECT_EQ(r.rounds, 2u);
  // a also hears from b once b has adopted.
  EXPECT_EQ(r.final_valuation[net.index_of("a")], 8.0);
  EXPECT_EQ(r.final_valuation[net.index_of("b")], 6.0);
  EXPECT_EQ(r.final_valuation[net.index_of("c")], 6.0);
  EXPECT_EQ(revenue(net, 4, 6, ids(net, "d")), 18.0);
}

TEST(Cascade, EmptySeedGroupAdoptsOnInherentValuation) {
  const auto net = fig1();
  // c alone reaches 3, then d, then {a, b}, then f, then e.
  const CascadeResult r = run_cascade(net, 3, {});
  EXPECT_EQ(names(net, r.adopters), "a,b,c,d,e,f");
  EXPECT_EQ(r.rounds, 4u);
  EXPECT_EQ(revenue(net, 4, 3, {}), 12.0);
  EXPECT_TRUE(run_cascade(net, 9, {}).adopters.empty());
}

TEST(Cascade, QuantityCapsPayingBuyers) {
  const auto net = fig1();
  EXPECT_EQ(revenue(net, 2, 6, ids(net, "d")), 6.0);
  EXPECT_EQ(revenue(net, 1, 6, ids(net, "d")), 0.0);
  EXPECT_EQ(revenue(net, 6, 7, ids(net, "d,f")), 28.0);
}

TEST(Cascade, DuplicateSeedsCountOnce) {
  const auto net = fig1();
  EXPECT_EQ(revenue(net, 4, 6, ids(net, "d,d")), 18.0);
}

TEST(Cascade, Errors) {
  const auto net = fig1();
  EXPECT_THROW(run_cascade(net, 6, std::vector<NodeId>{9}), Error);
  try {
    revenue(net, 1, 6, ids(net, "a,b"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSeedsExceedStock);
  }
}

TEST(Cascade, EngineCountMatchesFullRun) {
  const auto net = fig1();
  CascadeEngine engine(net);
  for (Money p = 1; p <= 10; ++p) {
    for (NodeId s = 0; s < net.size(); ++s) {
      const std::vector<NodeId> seeds = {s};
      const CascadeResult full = engine.run(p, seeds);
      const std::size_t paying = full.adopters.size() - 1;
      EXPECT_EQ(engine.count_paying(p, seeds), paying);
      EXPECT_EQ(engine.count_paying(p, seeds, 1), std::min<std::size_t>(paying, 1));
    }
  }
}

TEST(Cascade, InfluenceSumIsOverFinalAdopters) {
  const auto net = fig1();
  const CascadeResult r = run_cascade(net, 7, ids(net, "d,f"));
  for (NodeId v = 0; v < net.size(); ++v) {
    double s = 0;
    for (NodeId i : r.adopters) s += net.weight(i, v);
    EXPECT_EQ(r.influence_sum[v], s);
    EXPECT_EQ(r.final_valuation[v], net.inherent_valuation(v) + s);
  }
}

TEST(Cascade, MatchesAsynchronousOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 600; ++trial) {
    const auto net = testing::random_network(rng, 3 + trial % 10, 0.3);
    const auto dense = testing::densify(net);
    std::uniform_real_distribution<double> price(0.5, 12.0);
    const double p = price(rng);
    std::vector<NodeId> seeds;
    for (NodeId v = 0; v < net.size(); ++v) {
      if (rng() % 4 == 0) seeds.push_back(v);
    }
    const auto expected = testing::async_cascade(dense, p, seeds, rng);
    const CascadeResult got = run_cascade(net, p, seeds);
    for (NodeId v = 0; v < net.size(); ++v) {
      ASSERT_EQ(got.contains(v), expected[v] != 0) << "trial " << trial;
    }
  }
}

TEST(Bounds, TableMatchesConcertExample) {
  const auto net = fig1();
  const BoundTable table(net, testing::prices_1_to_10(), 4);
  const std::vector<Money> expected = {4, 8, 12, 16, 20, 24, 28, 24, 18, 10};
  ASSERT_EQ(table.entries().size(), 10u);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(table.entries()[i].bound, expected[i]) << "p=" << i + 1;
  }
  std::vector<Money> order;
  for (const auto& e : table.visit_order()) order.push_back(e.price);
  EXPECT_EQ(order, (std::vector<Money>{7, 6, 8, 5, 9, 4, 3, 10, 2, 1}));
  EXPECT_EQ(potential_buyers(net, 9).size(), 2u);
  EXPECT_EQ(revenue_upper_bound(net, 4, 9), 18.0);
}

TEST(Bounds, SeedSizeBound) {
  // 7 * (4 - k) > 18 holds for k = 0, 1 only.
  EXPECT_TRUE(seed_size_admissible(1, 4, 7, 18));
  EXPECT_FALSE(seed_size_admissible(2, 4, 7, 18));
  EXPECT_FALSE(seed_size_admissible(4, 4, 7, 0));
  EXPECT_EQ(seed_size_bound(4, 7, 18), std::optional<std::size_t>(1));
  EXPECT_EQ(seed_size_bound(4, 7, 0), std::optional<std::size_t>(3));
  EXPECT_EQ(seed_size_bound(4, 1, 4), std::nullopt);
}

}  // namespace
}  // namespace seedprice
