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

#include "greedy_search.h"

#include <algorithm>
#include <chrono>
#include <utility>

#include "parallel.h"
#include "seedprice/cascade.h"
#include "seedprice/error.h"

namespace seedprice::internal {

ScoringSelector::ScoringSelector(std::size_t nodes, unsigned threads,
                                 Score score)
    : score_(std::move(score)) {
  const unsigned workers = std::max(1u, threads);
  workspaces_.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) workspaces_.emplace_back(nodes);
}

std::optional<NodeId> ScoringSelector::select(const ImportanceState& state) {
  const std::vector<NodeId> candidates = state.candidates();
  if (candidates.empty()) return std::nullopt;
  scores_.assign(candidates.size(), 0.0);
  parallel_chunks(static_cast<unsigned>(workspaces_.size()),
                  candidates.size(),
                  [&](std::size_t worker, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      scores_[i] = score_(state, candidates[i],
                                          workspaces_[worker]);
                    }
                  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (scores_[i] > scores_[best]) best = i;
  }
  return candidates[best];
}

SolverResult greedy_price_search(const MonetizingNetwork& net,
                                 const PriceSet& prices, std::size_t quantity,
                                 SeedSelector& selector,
                                 const SolverOptions& options) {
  if (quantity == 0) {
    throw Error(ErrorCode::kInvalidQuantity, "quantity must be at least 1");
  }
  const auto start = std::chrono::steady_clock::now();
  const BoundTable table(net, prices, quantity);
  CascadeEngine engine(net);
  auto notify = [&](SearchEventKind kind, Money price,
                    std::span<const NodeId> seeds, Money rev, Money r) {
    if (options.observer) options.observer({kind, price, seeds, rev, r});
  };

  SolverResult result;
  Money r_global = 0.0;
  const auto& order = table.visit_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const PriceBound& entry = order[i];
    const Money p = entry.price;
    if (entry.bound <= r_global) {
      result.stats.prices_pruned = order.size() - i;
      notify(SearchEventKind::kStopped, p, {}, entry.bound, r_global);
      break;
    }
    ++result.stats.prices_examined;
    notify(SearchEventKind::kPriceVisited, p, {}, entry.bound, r_global);

    const auto potential = potential_buyer_mask(net, p);
    std::vector<NodeId> seeds;
    CascadeResult cascade = engine.run(p, seeds);
    for (;;) {
      ++result.stats.groups_evaluated;
      const std::size_t k = seeds.size();
      const std::size_t paying = cascade.adopters.size() - k;
      const Money rev =
          p * static_cast<double>(std::min(paying, quantity - k));
      notify(SearchEventKind::kGroupEvaluated, p, seeds, rev, r_global);
      if (rev > r_global) {
        r_global = rev;
        result.price = p;
        result.seeds = seeds;
        result.revenue = rev;
        notify(SearchEventKind::kImproved, p, seeds, rev, r_global);
      }
      if (!seed_size_admissible(k, quantity, p, r_global)) break;
      const ImportanceState state(net, p, seeds, std::move(cascade),
                                  potential);
      const std::optional<NodeId> next = selector.select(state);
      if (!next) break;
      seeds.push_back(*next);
      cascade = engine.run(p, seeds);
    }
  }
  std::sort(result.seeds.begin(), result.seeds.end());
  result.stats.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace seedprice::internal
