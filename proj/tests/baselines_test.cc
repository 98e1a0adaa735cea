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

#include "seedprice/baselines.h"
#include "seedprice/cascade.h"
#include "seedprice/datagen.h"
#include "seedprice/error.h"
#include "testing/fixtures.h"
#include "testing/oracle.h"

namespace seedprice {
namespace {

using testing::fig1;
using testing::names;
using testing::prices_1_to_10;

constexpr StrategyKind kGreedyKinds[] = {
    StrategyKind::kRandom,     StrategyKind::kSumOfWeights,
    StrategyKind::kAblationN,  StrategyKind::kAblationF,
    StrategyKind::kAblationP};

TEST(NoSocial, ConcertExample) {
  const SolverResult r = solve_nosocial(fig1(), prices_1_to_10(), 4);
  EXPECT_EQ(r.price, 2.0);
  EXPECT_TRUE(r.seeds.empty());
  EXPECT_EQ(r.revenue, 6.0);
  EXPECT_EQ(r.stats.prices_examined, 10u);
  EXPECT_EQ(r.stats.prices_pruned, 0u);
}

TEST(NoSocial, LowestPriceWinsTies) {
  const std::vector<WeightedEdge> none;
  // p=2 sells two units, p=4 sells one: both earn 4.
  const auto net = build_network({"x", "y"}, {2, 4}, none);
  const SolverResult r = solve_nosocial(net, PriceSet({2, 4}), 2);
  EXPECT_EQ(r.price, 2.0);
  EXPECT_EQ(r.revenue, 4.0);
}

TEST(NoSocial, QuantityCaps) {
  EXPECT_EQ(solve_nosocial(fig1(), prices_1_to_10(), 1).revenue, 3.0);
  EXPECT_THROW(solve_nosocial(fig1(), prices_1_to_10(), 0), Error);
}

TEST(NoSocial, DispatchThroughBaseline) {
  const SolverResult a = solve_nosocial(fig1(), prices_1_to_10(), 4);
  const SolverResult b =
      solve_baseline(fig1(), prices_1_to_10(), 4, StrategyKind::kNoSocial);
  EXPECT_EQ(a.price, b.price);
  EXPECT_EQ(a.revenue, b.revenue);
}

TEST(Baselines, Names) {
  EXPECT_EQ(to_string(StrategyKind::kRandom), "random");
  EXPECT_EQ(to_string(StrategyKind::kSumOfWeights), "sumweights");
  EXPECT_EQ(to_string(StrategyKind::kAblationN), "ablation-n");
  EXPECT_EQ(to_string(StrategyKind::kAblationF), "ablation-f");
  EXPECT_EQ(to_string(StrategyKind::kAblationP), "ablation-p");
  EXPECT_EQ(to_string(StrategyKind::kNoSocial), "nosocial");
}

TEST(Baselines, RandomNeedsSeed) {
  try {
    solve_baseline(fig1(), prices_1_to_10(), 4, StrategyKind::kRandom);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingSeedForRandom);
  }
}

TEST(Baselines, RandomIsReproducible) {
  InstanceSpec spec;
  spec.node_count = 60;
  spec.edge_probability = 0.05;
  const auto net = generate_instance(spec);
  const auto a = solve_baseline(net, prices_1_to_10(), 6, StrategyKind::kRandom, 9);
  const auto b = solve_baseline(net, prices_1_to_10(), 6, StrategyKind::kRandom, 9);
  EXPECT_EQ(a.price, b.price);
  EXPECT_EQ(a.seeds, b.seeds);
  EXPECT_EQ(a.revenue, b.revenue);
}

TEST(Baselines, SumOfWeightsSeedsHeaviestFirst) {
  const auto net = fig1();
  std::vector<std::string> firsts;
  SolverOptions options;
  options.observer = [&](const SearchEvent& e) {
    if (e.kind == SearchEventKind::kGroupEvaluated && e.seeds.size() == 1) {
      firsts.push_back(net.label(e.seeds[0]));
    }
  };
  solve_baseline(net, prices_1_to_10(), 4, StrategyKind::kSumOfWeights, {},
                 options);
  ASSERT_FALSE(firsts.empty());
  // d has out-weight 11, the largest.
  for (const auto& f : firsts) EXPECT_EQ(f, "d");
}

TEST(Baselines, ReportedRevenueReplays) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto net = testing::random_network(rng, 6 + trial % 6, 0.3);
    const std::size_t n = 1 + trial % 4;
    for (StrategyKind kind : kGreedyKinds) {
      const SolverResult r =
          solve_baseline(net, prices_1_to_10(), n, kind, trial);
      ASSERT_LE(r.seeds.size(), n);
      ASSERT_EQ(r.revenue, revenue(net, n, r.price, r.seeds))
          << to_string(kind) << " trial " << trial;
      ASSERT_EQ(r.stats.prices_examined + r.stats.prices_pruned, 10u);
    }
  }
}

TEST(Baselines, ConcertExampleValues) {
  const auto net = fig1();
  for (StrategyKind kind : kGreedyKinds) {
    const SolverResult r = solve_baseline(net, prices_1_to_10(), 4, kind, 1);
    EXPECT_LE(r.revenue, 18.0) << to_string(kind);
    EXPECT_GE(r.revenue, 6.0) << to_string(kind);
  }
}

}  // namespace
}  // namespace seedprice
