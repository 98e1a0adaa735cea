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

#include "seedprice/baselines.h"

#include <algorithm>
#include <chrono>

#include "greedy_search.h"
#include "seedprice/error.h"
#include "seedprice/importance.h"
#include "seedprice/rng.h"

namespace seedprice {
namespace {

class RandomSelector final : public internal::SeedSelector {
 public:
  explicit RandomSelector(std::uint64_t seed) : rng_(seed) {}

  std::optional<NodeId> select(const ImportanceState& state) override {
    const std::vector<NodeId> candidates = state.candidates();
    if (candidates.empty()) return std::nullopt;
    return candidates[rng_.uniform_below(candidates.size())];
  }

 private:
  Rng rng_;
};

double out_weight_sum(const ImportanceState& state, NodeId u,
                      FeedbackWorkspace&) {
  double sum = 0.0;
  for (const Arc& arc : state.network().out_arcs(u)) sum += arc.weight;
  return sum;
}

double normalized_sum(const ImportanceState& state, NodeId u,
                      FeedbackWorkspace&) {
  double sum = 0.0;
  for (const Arc& arc : state.network().out_arcs(u)) {
    sum += state.arc_normalized_weight(arc.node, arc.weight);
  }
  return sum;
}

double feedback_sum(const ImportanceState& state, NodeId u,
                    FeedbackWorkspace& ws) {
  ws.propagate(state, u);
  double sum = 0.0;
  for (NodeId v : ws.touched()) sum += ws.value(v);
  return sum;
}

double buyer_normalized_sum(const ImportanceState& state, NodeId u,
                            FeedbackWorkspace&) {
  double sum = 0.0;
  for (const Arc& arc : state.network().out_arcs(u)) {
    if (state.is_potential_buyer(arc.node)) {
      sum += state.arc_normalized_weight(arc.node, arc.weight);
    }
  }
  return sum;
}

}  // namespace

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kRandom: return "random";
    case StrategyKind::kSumOfWeights: return "sumweights";
    case StrategyKind::kAblationN: return "ablation-n";
    case StrategyKind::kAblationF: return "ablation-f";
    case StrategyKind::kAblationP: return "ablation-p";
    case StrategyKind::kNoSocial: return "nosocial";
  }
  return "unknown";
}

SolverResult solve_baseline(const MonetizingNetwork& net,
                            const PriceSet& prices, std::size_t quantity,
                            StrategyKind kind,
                            std::optional<std::uint64_t> rng_seed,
                            const SolverOptions& options) {
  if (kind == StrategyKind::kNoSocial) {
    return solve_nosocial(net, prices, quantity);
  }
  if (kind == StrategyKind::kRandom) {
    if (!rng_seed) {
      throw Error(ErrorCode::kMissingSeedForRandom,
                  "the random strategy needs an rng seed");
    }
    RandomSelector selector(*rng_seed);
    return internal::greedy_price_search(net, prices, quantity, selector,
                                         options);
  }
  internal::ScoringSelector::Score score;
  switch (kind) {
    case StrategyKind::kSumOfWeights: score = out_weight_sum; break;
    case StrategyKind::kAblationN: score = normalized_sum; break;
    case StrategyKind::kAblationF: score = feedback_sum; break;
    case StrategyKind::kAblationP: score = buyer_normalized_sum; break;
    default: break;
  }
  internal::ScoringSelector selector(net.size(), options.threads,
                                     std::move(score));
  return internal::greedy_price_search(net, prices, quantity, selector,
                                       options);
}

SolverResult solve_nosocial(const MonetizingNetwork& net,
                            const PriceSet& prices, std::size_t quantity) {
  if (quantity == 0) {
    throw Error(ErrorCode::kInvalidQuantity, "quantity must be at least 1");
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<Money> chi(net.inherent_valuations().begin(),
                         net.inherent_valuations().end());
  std::sort(chi.begin(), chi.end());
  SolverResult result;
  for (Money p : prices) {
    ++result.stats.prices_examined;
    ++result.stats.groups_evaluated;
    const auto buyers = static_cast<std::size_t>(
        chi.end() - std::lower_bound(chi.begin(), chi.end(), p));
    const Money rev = p * static_cast<double>(std::min(quantity, buyers));
    if (rev > result.revenue) {
      result.price = p;
      result.revenue = rev;
    }
  }
  result.stats.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace seedprice
