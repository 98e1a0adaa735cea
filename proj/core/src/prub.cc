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

#include "seedprice/prub.h"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "parallel.h"
#include "seedprice/cascade.h"
#include "seedprice/error.h"

namespace seedprice {
namespace {

constexpr std::size_t kBatchGroups = 4096;

// Lexicographic successor of a k-combination of [0, n); false after the last.
bool next_combination(std::vector<NodeId>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct Incumbent {
  Money price = 0.0;
  std::vector<NodeId> seeds;
  Money revenue = 0.0;
};

// Exhaustive seed-group search at one price. `r_global` and `best` are the
// running incumbent; both only change on strict improvement.
class PriceSearch {
 public:
  PriceSearch(const MonetizingNetwork& net, unsigned threads,
              const SolverOptions* options)
      : net_(net), options_(options) {
    const unsigned workers = std::max(1u, threads);
    engines_.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) engines_.emplace_back(net);
  }

  void run(Money price, std::size_t quantity, std::size_t size_cap,
           Money& r_global, Incumbent& best, SearchStats& stats) {
    const std::size_t nodes = net_.size();
    // The empty group is always evaluated.
    const std::size_t empty_paying =
        engines_[0].count_paying(price, {}, quantity);
    ++stats.groups_evaluated;
    offer(price, {}, price * static_cast<double>(empty_paying), r_global,
          best);

    for (std::size_t k = 1; k <= std::min(size_cap, nodes) &&
                            seed_size_admissible(k, quantity, price, r_global);
         ++k) {
      enumerate_size(price, quantity, k, r_global, best, stats);
    }
  }

 private:
  void enumerate_size(Money price, std::size_t quantity, std::size_t k,
                      Money& r_global, Incumbent& best, SearchStats& stats) {
    const std::size_t nodes = net_.size();
    const std::size_t stock_left = quantity - k;
    std::vector<NodeId> combo(k);
    std::iota(combo.begin(), combo.end(), NodeId{0});
    bool more = true;
    while (more) {
      batch_.clear();
      std::size_t groups = 0;
      while (more && groups < kBatchGroups) {
        batch_.insert(batch_.end(), combo.begin(), combo.end());
        ++groups;
        more = next_combination(combo, nodes);
      }
      paying_.assign(groups, 0);
      internal::parallel_chunks(
          static_cast<unsigned>(engines_.size()), groups,
          [&](std::size_t worker, std::size_t begin, std::size_t end) {
            CascadeEngine& engine = engines_[worker];
            for (std::size_t g = begin; g < end; ++g) {
              std::span<const NodeId> group(batch_.data() + g * k, k);
              paying_[g] = engine.count_paying(price, group, stock_left);
            }
          });
      stats.groups_evaluated += groups;
      for (std::size_t g = 0; g < groups; ++g) {
        std::span<const NodeId> group(batch_.data() + g * k, k);
        offer(price, group, price * static_cast<double>(paying_[g]), r_global,
              best);
      }
    }
  }

  void offer(Money price, std::span<const NodeId> group, Money rev,
             Money& r_global, Incumbent& best) {
    if (options_ && options_->observer) {
      options_->observer({SearchEventKind::kGroupEvaluated, price, group, rev,
                          r_global});
    }
    if (rev > r_global) {
      r_global = rev;
      best.price = price;
      best.seeds.assign(group.begin(), group.end());
      best.revenue = rev;
      if (options_ && options_->observer) {
        options_->observer(
            {SearchEventKind::kImproved, price, group, rev, r_global});
      }
    }
  }

  const MonetizingNetwork& net_;
  const SolverOptions* options_;
  std::vector<CascadeEngine> engines_;
  std::vector<NodeId> batch_;
  std::vector<std::size_t> paying_;
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void require_quantity(std::size_t quantity) {
  if (quantity == 0) {
    throw Error(ErrorCode::kInvalidQuantity, "quantity must be at least 1");
  }
}

}  // namespace

SolverResult solve_prub(const MonetizingNetwork& net, const PriceSet& prices,
                        std::size_t quantity, const SolverOptions& options) {
  require_quantity(quantity);
  const auto start = std::chrono::steady_clock::now();
  const BoundTable table(net, prices, quantity);
  PriceSearch search(net, options.threads, &options);

  SolverResult result;
  Incumbent best;
  Money r_global = 0.0;
  const auto& order = table.visit_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const PriceBound& entry = order[i];
    if (entry.bound <= r_global) {
      result.stats.prices_pruned = order.size() - i;
      if (options.observer) {
        options.observer({SearchEventKind::kStopped, entry.price, {},
                          entry.bound, r_global});
      }
      break;
    }
    ++result.stats.prices_examined;
    if (options.observer) {
      options.observer({SearchEventKind::kPriceVisited, entry.price, {},
                        entry.bound, r_global});
    }
    search.run(entry.price, quantity, quantity, r_global, best, result.stats);
  }
  result.price = best.price;
  result.seeds = std::move(best.seeds);
  result.revenue = best.revenue;
  result.stats.wall_time_ms = elapsed_ms(start);
  return result;
}

SolverResult solve_bruteforce(const MonetizingNetwork& net,
                              const PriceSet& prices, std::size_t quantity) {
  require_quantity(quantity);
  if (net.size() > kBruteforceMaxNodes) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "exhaustive search is limited to " +
                    std::to_string(kBruteforceMaxNodes) + " nodes, got " +
                    std::to_string(net.size()));
  }
  const auto start = std::chrono::steady_clock::now();
  const BoundTable table(net, prices, quantity);
  const std::size_t nodes = net.size();
  const std::size_t max_size = std::min(quantity, nodes);

  SolverResult result;
  for (const PriceBound& entry : table.visit_order()) {
    ++result.stats.prices_examined;
    for (std::size_t k = 0; k <= max_size; ++k) {
      std::vector<NodeId> combo(k);
      std::iota(combo.begin(), combo.end(), NodeId{0});
      do {
        const Money rev = revenue(net, quantity, entry.price, combo);
        ++result.stats.groups_evaluated;
        if (rev > result.revenue) {
          result.price = entry.price;
          result.seeds = combo;
          result.revenue = rev;
        }
      } while (next_combination(combo, nodes));
    }
  }
  result.stats.wall_time_ms = elapsed_ms(start);
  return result;
}

PriceOptimum per_price_best(const MonetizingNetwork& net, Money price,
                            std::size_t quantity, std::size_t size_cap,
                            unsigned threads) {
  if (size_cap > quantity) {
    throw Error(ErrorCode::kInvalidQuantity,
                "size cap " + std::to_string(size_cap) + " exceeds quantity " +
                    std::to_string(quantity));
  }
  PriceSearch search(net, threads, nullptr);
  Incumbent best;
  Money r_local = 0.0;
  SearchStats stats;
  search.run(price, quantity, size_cap, r_local, best, stats);
  return {std::move(best.seeds), best.revenue};
}

}  // namespace seedprice
