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

#ifndef SEEDPRICE_IMPORTANCE_H_
#define SEEDPRICE_IMPORTANCE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "seedprice/cascade.h"
#include "seedprice/model.h"

namespace seedprice {

// IF values at or above this count as having reached 1.
inline constexpr double kFeedbackSaturation = 1.0 - 1e-12;

// Snapshot of a price and seed group A together with sigma(A): the inputs
// that normalized weights, importance feedback and pricing-sensitive
// importance are computed against. Immutable; safe to share across threads.
class ImportanceState {
 public:
  ImportanceState(const MonetizingNetwork& net, Money price,
                  std::vector<NodeId> seeds);

  // Reuses an already computed cascade for (price, seeds) and a cached
  // potential-buyer mask for `price`.
  ImportanceState(const MonetizingNetwork& net, Money price,
                  std::vector<NodeId> seeds, CascadeResult cascade,
                  std::shared_ptr<const std::vector<char>> potential_mask);

  const MonetizingNetwork& network() const { return *net_; }
  Money price() const { return price_; }
  std::span<const NodeId> seeds() const { return seeds_; }
  const CascadeResult& cascade() const { return cascade_; }

  bool adopted(NodeId v) const { return cascade_.contains(v); }
  // X_A(v) = chi_v + F(sum of w_iv over i in sigma(A)).
  Money current_valuation(NodeId v) const {
    return cascade_.final_valuation[v];
  }
  bool is_potential_buyer(NodeId v) const { return (*potential_)[v] != 0; }
  std::span<const NodeId> potential_buyers() const { return buyers_; }

  // Nodes that have not adopted, ascending.
  std::vector<NodeId> candidates() const;

  // w-hat_uv. Zero when u == v, when v has adopted or already values the
  // commodity at the price, and when there is no edge u -> v. Otherwise the
  // marginal valuation gain F(w_uv + S_v) - F(S_v) over the remaining gap
  // p - X_A(v), capped at 1. Throws kUnknownNode.
  double normalized_weight(NodeId u, NodeId v) const;

  // w-hat for an existing arc into v with weight w (no u == v check).
  double arc_normalized_weight(NodeId v, double w) const {
    const double gap = gap_[v];
    if (gap <= 0.0) return 0.0;
    const ConcaveInfluence& f = net_->influence();
    const double s = cascade_.influence_sum[v];
    const double gain = f(w + s) - f(s);
    return gain >= gap ? 1.0 : gain / gap;
  }

 private:
  void init(std::shared_ptr<const std::vector<char>> potential_mask);

  const MonetizingNetwork* net_;
  Money price_;
  std::vector<NodeId> seeds_;
  CascadeResult cascade_;
  std::shared_ptr<const std::vector<char>> potential_;
  std::vector<NodeId> buyers_;
  std::vector<double> gap_;  // p - X_A(v), or 0 when w-hat into v is 0
};

// {v : X_max(v) >= price} as a per-node flag vector.
std::shared_ptr<const std::vector<char>> potential_buyer_mask(
    const MonetizingNetwork& net, Money price);

// Scratch space for feedback propagation. One per thread.
class FeedbackWorkspace {
 public:
  explicit FeedbackWorkspace(std::size_t nodes);

  // Runs the feedback recursion for source u. Afterwards touched() lists
  // every v with IF(u, v) > 0 or that received a contribution, and value(v)
  // is IF(u, v) for those nodes.
  void propagate(const ImportanceState& state, NodeId u);

  std::span<const NodeId> touched() const { return touched_; }
  double value(NodeId v) const { return value_[v]; }
  // Propagation steps taken (k at which V_u^(k) became empty).
  std::size_t steps() const { return steps_; }

 private:
  std::uint32_t fresh_stamp();

  std::vector<double> value_;
  std::vector<std::uint32_t> touched_stamp_;
  std::vector<std::uint32_t> reached_stamp_;
  std::vector<NodeId> touched_;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> step_;
  std::vector<std::uint32_t> step_stamp_;
  std::uint32_t stamp_ = 0;
  std::size_t steps_ = 0;
};

// IF(u, .) for every node, as a dense vector; IF(u, u) = 0.
std::vector<double> importance_feedback(const ImportanceState& state,
                                        NodeId u);

// Psi(u): sum of IF(u, i) over the potential buyers at the state's price.
double pricing_sensitive_importance(const ImportanceState& state, NodeId u);
double pricing_sensitive_importance(const ImportanceState& state, NodeId u,
                                    FeedbackWorkspace& workspace);

}  // namespace seedprice

#endif  // SEEDPRICE_IMPORTANCE_H_
