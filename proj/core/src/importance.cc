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

#include "seedprice/importance.h"

#include <algorithm>
#include <limits>
#include <utility>

namespace seedprice {

ImportanceState::ImportanceState(const MonetizingNetwork& net, Money price,
                                 std::vector<NodeId> seeds)
    : net_(&net), price_(price), seeds_(std::move(seeds)) {
  cascade_ = run_cascade(net, price, seeds_);
  init(potential_buyer_mask(net, price));
}

ImportanceState::ImportanceState(
    const MonetizingNetwork& net, Money price, std::vector<NodeId> seeds,
    CascadeResult cascade,
    std::shared_ptr<const std::vector<char>> potential_mask)
    : net_(&net),
      price_(price),
      seeds_(std::move(seeds)),
      cascade_(std::move(cascade)) {
  init(std::move(potential_mask));
}

void ImportanceState::init(
    std::shared_ptr<const std::vector<char>> potential_mask) {
  potential_ = std::move(potential_mask);
  const std::size_t n = net_->size();
  buyers_.clear();
  gap_.assign(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    if ((*potential_)[v]) buyers_.push_back(v);
    // Adopters, seeds included, take no further importance.
    if (!cascade_.contains(v) && price_ > cascade_.final_valuation[v]) {
      gap_[v] = price_ - cascade_.final_valuation[v];
    }
  }
}

std::vector<NodeId> ImportanceState::candidates() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < net_->size(); ++v) {
    if (!adopted(v)) out.push_back(v);
  }
  return out;
}

double ImportanceState::normalized_weight(NodeId u, NodeId v) const {
  net_->check_node(u);
  net_->check_node(v);
  if (u == v) return 0.0;
  const double w = net_->weight(u, v);
  if (w <= 0.0) return 0.0;
  return arc_normalized_weight(v, w);
}

std::shared_ptr<const std::vector<char>> potential_buyer_mask(
    const MonetizingNetwork& net, Money price) {
  auto mask = std::make_shared<std::vector<char>>(net.size(), 0);
  for (NodeId v : potential_buyers(net, price)) (*mask)[v] = 1;
  return mask;
}

FeedbackWorkspace::FeedbackWorkspace(std::size_t nodes)
    : value_(nodes, 0.0),
      touched_stamp_(nodes, 0),
      reached_stamp_(nodes, 0),
      step_stamp_(nodes, 0) {}

std::uint32_t FeedbackWorkspace::fresh_stamp() {
  if (stamp_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(touched_stamp_.begin(), touched_stamp_.end(), 0);
    std::fill(reached_stamp_.begin(), reached_stamp_.end(), 0);
    std::fill(step_stamp_.begin(), step_stamp_.end(), 0);
    stamp_ = 0;
  }
  return ++stamp_;
}

void FeedbackWorkspace::propagate(const ImportanceState& state, NodeId u) {
  const MonetizingNetwork& net = state.network();
  net.check_node(u);
  // Stamps are drawn from one increasing counter, so a step stamp never
  // collides with the run stamp.
  const std::uint32_t run = fresh_stamp();
  std::uint32_t step = fresh_stamp();
  touched_.clear();
  step_.clear();
  steps_ = 0;

  auto contribute = [&](NodeId v, double delta) {
    if (v == u || reached_stamp_[v] == run) return;
    if (touched_stamp_[v] != run) {
      touched_stamp_[v] = run;
      value_[v] = 0.0;
      touched_.push_back(v);
    }
    value_[v] += delta;
    if (step_stamp_[v] != step) {
      step_stamp_[v] = step;
      step_.push_back(v);
    }
  };

  // IF^(0)(u, v) = w-hat_uv.
  for (const Arc& arc : net.out_arcs(u)) {
    contribute(arc.node, state.arc_normalized_weight(arc.node, arc.weight));
  }
  for (;;) {
    // V_u^(k): nodes whose importance first reached 1 in this step.
    frontier_.clear();
    for (NodeId v : step_) {
      if (value_[v] >= kFeedbackSaturation) {
        value_[v] = 1.0;
        reached_stamp_[v] = run;
        frontier_.push_back(v);
      }
    }
    if (frontier_.empty()) break;
    ++steps_;
    step = fresh_stamp();
    step_.clear();
    for (NodeId i : frontier_) {
      for (const Arc& arc : net.out_arcs(i)) {
        contribute(arc.node,
                   state.arc_normalized_weight(arc.node, arc.weight));
      }
    }
  }
}

std::vector<double> importance_feedback(const ImportanceState& state,
                                        NodeId u) {
  FeedbackWorkspace workspace(state.network().size());
  workspace.propagate(state, u);
  std::vector<double> out(state.network().size(), 0.0);
  for (NodeId v : workspace.touched()) out[v] = workspace.value(v);
  return out;
}

double pricing_sensitive_importance(const ImportanceState& state, NodeId u,
                                    FeedbackWorkspace& workspace) {
  workspace.propagate(state, u);
  double psi = 0.0;
  for (NodeId v : workspace.touched()) {
    if (state.is_potential_buyer(v)) psi += workspace.value(v);
  }
  return psi;
}

double pricing_sensitive_importance(const ImportanceState& state, NodeId u) {
  FeedbackWorkspace workspace(state.network().size());
  return pricing_sensitive_importance(state, u, workspace);
}

}  // namespace seedprice
