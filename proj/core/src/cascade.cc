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

#include "seedprice/cascade.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "seedprice/error.h"

namespace seedprice {

CascadeEngine::CascadeEngine(const MonetizingNetwork& net)
    : net_(&net),
      by_valuation_(net.size()),
      adopted_epoch_(net.size(), 0),
      sum_epoch_(net.size(), 0),
      touched_epoch_(net.size(), 0),
      sum_(net.size(), 0.0) {
  std::iota(by_valuation_.begin(), by_valuation_.end(), NodeId{0});
  std::stable_sort(by_valuation_.begin(), by_valuation_.end(),
                   [&](NodeId a, NodeId b) {
                     return net.inherent_valuation(a) >
                            net.inherent_valuation(b);
                   });
}

void CascadeEngine::next_epoch() {
  if (epoch_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(adopted_epoch_.begin(), adopted_epoch_.end(), 0);
    std::fill(sum_epoch_.begin(), sum_epoch_.end(), 0);
    std::fill(touched_epoch_.begin(), touched_epoch_.end(), 0);
    epoch_ = 0;
  }
  ++epoch_;
}

std::size_t CascadeEngine::propagate(Money price,
                                     std::span<const NodeId> seeds,
                                     std::size_t cap, std::size_t* rounds) {
  const MonetizingNetwork& net = *net_;
  const ConcaveInfluence& f = net.influence();
  next_epoch();
  const std::uint32_t cascade = epoch_;
  adopted_list_.clear();
  frontier_.clear();
  *rounds = 0;

  for (NodeId s : seeds) {
    net.check_node(s);
    if (adopted_epoch_[s] == cascade) continue;
    adopted_epoch_[s] = cascade;
    frontier_.push_back(s);
    adopted_list_.push_back(s);
  }
  std::size_t paying = 0;
  for (NodeId v : by_valuation_) {
    if (net.inherent_valuation(v) < price) break;
    if (adopted_epoch_[v] == cascade) continue;
    adopted_epoch_[v] = cascade;
    frontier_.push_back(v);
    adopted_list_.push_back(v);
    if (++paying >= cap) return cap;
  }

  while (!frontier_.empty()) {
    next_epoch();
    const std::uint32_t round = epoch_;
    touched_.clear();
    for (NodeId u : frontier_) {
      for (const Arc& arc : net.out_arcs(u)) {
        const NodeId v = arc.node;
        if (sum_epoch_[v] < cascade) {
          sum_epoch_[v] = cascade;
          sum_[v] = 0.0;
        }
        sum_[v] += arc.weight;
        if (adopted_epoch_[v] != cascade && touched_epoch_[v] != round) {
          touched_epoch_[v] = round;
          touched_.push_back(v);
        }
      }
    }
    next_.clear();
    for (NodeId v : touched_) {
      if (net.inherent_valuation(v) + f(sum_[v]) >= price) next_.push_back(v);
    }
    for (NodeId v : next_) {
      adopted_epoch_[v] = cascade;
      adopted_list_.push_back(v);
    }
    if (!next_.empty()) ++*rounds;
    paying += next_.size();
    if (paying >= cap) return cap;
    std::swap(frontier_, next_);
  }
  return paying;
}

std::size_t CascadeEngine::count_paying(Money price,
                                        std::span<const NodeId> seeds,
                                        std::size_t cap) {
  if (cap == 0) return 0;
  std::size_t rounds = 0;
  return propagate(price, seeds, cap, &rounds);
}

CascadeResult CascadeEngine::run(Money price, std::span<const NodeId> seeds) {
  const MonetizingNetwork& net = *net_;
  CascadeResult result;
  propagate(price, seeds, std::numeric_limits<std::size_t>::max(),
            &result.rounds);
  const std::size_t n = net.size();
  result.adopters = adopted_list_;
  std::sort(result.adopters.begin(), result.adopters.end());
  result.adopted.assign(n, 0);
  for (NodeId v : result.adopters) result.adopted[v] = 1;
  result.influence_sum.assign(n, 0.0);
  // Sums against the final adopter set, independent of push order.
  for (NodeId u : result.adopters) {
    for (const Arc& arc : net.out_arcs(u)) {
      result.influence_sum[arc.node] += arc.weight;
    }
  }
  result.final_valuation.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    result.final_valuation[v] =
        net.inherent_valuation(v) + net.influence()(result.influence_sum[v]);
  }
  return result;
}

CascadeResult run_cascade(const MonetizingNetwork& net, Money price,
                          std::span<const NodeId> seeds) {
  CascadeEngine engine(net);
  return engine.run(price, seeds);
}

namespace {

std::size_t distinct_count(const MonetizingNetwork& net,
                           std::span<const NodeId> seeds) {
  std::vector<NodeId> sorted(seeds.begin(), seeds.end());
  for (NodeId s : sorted) net.check_node(s);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

}  // namespace

Money revenue(const MonetizingNetwork& net, std::size_t quantity, Money price,
              std::span<const NodeId> seeds) {
  const std::size_t k = distinct_count(net, seeds);
  if (k > quantity) {
    throw Error(ErrorCode::kSeedsExceedStock,
                std::to_string(k) + " seeds exceed stock of " +
                    std::to_string(quantity));
  }
  const CascadeResult cascade = run_cascade(net, price, seeds);
  const std::size_t paying = cascade.adopters.size() - k;
  return price * static_cast<double>(std::min(paying, quantity - k));
}

std::vector<NodeId> potential_buyers(const MonetizingNetwork& net,
                                     Money price) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < net.size(); ++v) {
    if (max_valuation(net, v) >= price) out.push_back(v);
  }
  return out;
}

Money revenue_upper_bound(const MonetizingNetwork& net, std::size_t quantity,
                          Money price) {
  const std::size_t m = potential_buyers(net, price).size();
  return price * static_cast<double>(std::min(quantity, m));
}

bool seed_size_admissible(std::size_t k, std::size_t quantity, Money price,
                          Money r_global) {
  // k < n - r/p  <=>  p * (n - k) > r for p > 0; multiplying avoids the
  // division rounding on integer inputs.
  return k < quantity && price * static_cast<double>(quantity - k) > r_global;
}

std::optional<std::size_t> seed_size_bound(std::size_t quantity, Money price,
                                           Money r_global) {
  if (!seed_size_admissible(0, quantity, price, r_global)) return std::nullopt;
  // Admissibility is monotone in k; bisect for the last admissible size.
  std::size_t lo = 0, hi = quantity;  // lo admissible, hi not
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (seed_size_admissible(mid, quantity, price, r_global)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

BoundTable::BoundTable(const MonetizingNetwork& net, const PriceSet& prices,
                       std::size_t quantity) {
  std::vector<Money> max_vals(net.size());
  for (NodeId v = 0; v < net.size(); ++v) max_vals[v] = max_valuation(net, v);
  std::sort(max_vals.begin(), max_vals.end());
  entries_.reserve(prices.size());
  for (Money p : prices) {
    const auto first =
        std::lower_bound(max_vals.begin(), max_vals.end(), p);
    const auto m = static_cast<std::size_t>(max_vals.end() - first);
    entries_.push_back(
        {p, m, p * static_cast<double>(std::min(quantity, m))});
  }
  order_ = entries_;
  std::stable_sort(order_.begin(), order_.end(),
                   [](const PriceBound& a, const PriceBound& b) {
                     return a.bound > b.bound;
                   });
}

}  // namespace seedprice
