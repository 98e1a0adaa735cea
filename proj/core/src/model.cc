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

#include "seedprice/model.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "seedprice/error.h"

namespace seedprice {

PriceSet::PriceSet(std::vector<Money> prices) : prices_(std::move(prices)) {
  if (prices_.empty()) {
    throw Error(ErrorCode::kEmptyPriceSet, "price set is empty");
  }
  for (std::size_t i = 0; i < prices_.size(); ++i) {
    if (!std::isfinite(prices_[i]) || prices_[i] <= 0.0) {
      throw Error(ErrorCode::kInvalidPriceSet,
                  "prices must be positive and finite");
    }
    if (i > 0 && prices_[i] <= prices_[i - 1]) {
      throw Error(ErrorCode::kInvalidPriceSet,
                  "prices must be strictly ascending");
    }
  }
}

PriceSet PriceSet::integer_range(long lo, long hi) {
  if (lo > hi) {
    throw Error(ErrorCode::kEmptyPriceSet,
                "empty price range " + std::to_string(lo) + ".." +
                    std::to_string(hi));
  }
  std::vector<Money> prices;
  prices.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long p = lo; p <= hi; ++p) prices.push_back(static_cast<Money>(p));
  return PriceSet(std::move(prices));
}

ConcaveInfluence ConcaveInfluence::sqrt() {
  ConcaveInfluence f;
  f.kind_ = InfluenceKind::kSqrt;
  f.name_ = "sqrt";
  return f;
}

ConcaveInfluence ConcaveInfluence::log1p() {
  ConcaveInfluence f;
  f.kind_ = InfluenceKind::kLog1p;
  f.name_ = "log1p";
  return f;
}

ConcaveInfluence ConcaveInfluence::custom(std::string name,
                                          std::function<double(double)> fn) {
  if (!fn) {
    throw Error(ErrorCode::kInvalidArgument, "custom influence has no body");
  }
  ConcaveInfluence f;
  f.kind_ = InfluenceKind::kCustom;
  f.name_ = std::move(name);
  f.fn_ = std::move(fn);
  return f;
}

ConcaveInfluence ConcaveInfluence::from_name(std::string_view name) {
  if (name == "identity") return identity();
  if (name == "sqrt") return sqrt();
  if (name == "log1p") return log1p();
  throw Error(ErrorCode::kInvalidArgument,
              "unknown influence function '" + std::string(name) +
                  "' (expected identity, sqrt or log1p)");
}

double ConcaveInfluence::operator()(double x) const {
  switch (kind_) {
    case InfluenceKind::kIdentity: return x;
    case InfluenceKind::kSqrt: return std::sqrt(x);
    case InfluenceKind::kLog1p: return std::log1p(x);
    case InfluenceKind::kCustom: return fn_(x);
  }
  return x;
}

void ConcaveInfluence::validate(double max_x) const {
  constexpr int kSamples = 64;
  if (!(max_x > 0.0) || !std::isfinite(max_x)) max_x = 1.0;
  std::vector<double> xs(kSamples), ys(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    xs[i] = max_x * i / (kSamples - 1);
    ys[i] = (*this)(xs[i]);
  }
  const double scale = std::max(1.0, std::abs(ys.back()));
  const double tol = 1e-9 * scale;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kNotConcave,
                "influence function '" + name_ + "' " + what);
  };
  if (std::abs(ys[0]) > tol) fail("does not satisfy F(0) = 0");
  for (int i = 0; i < kSamples; ++i) {
    if (!std::isfinite(ys[i]) || ys[i] < -tol) fail("is negative");
    if (i > 0 && ys[i] < ys[i - 1] - tol) fail("is decreasing");
    // Evenly spaced grid: x_i is the midpoint of x_{i-1} and x_{i+1}.
    if (i > 0 && i + 1 < kSamples &&
        ys[i] < 0.5 * (ys[i - 1] + ys[i + 1]) - tol) {
      fail("is not concave");
    }
  }
}

double MonetizingNetwork::weight(NodeId u, NodeId v) const {
  auto arcs = out_arcs(u);
  auto it = std::lower_bound(
      arcs.begin(), arcs.end(), v,
      [](const Arc& a, NodeId target) { return a.node < target; });
  return (it != arcs.end() && it->node == v) ? it->weight : 0.0;
}

std::optional<NodeId> MonetizingNetwork::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId MonetizingNetwork::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorCode::kUnknownNode,
              "unknown node '" + std::string(label) + "'");
}

void MonetizingNetwork::check_node(NodeId v) const {
  if (v >= size()) {
    throw Error(ErrorCode::kUnknownNode,
                "node index " + std::to_string(v) + " out of range");
  }
}

bool MonetizingNetwork::operator==(const MonetizingNetwork& other) const {
  return labels_ == other.labels_ && valuations_ == other.valuations_ &&
         out_offsets_ == other.out_offsets_ && out_arcs_ == other.out_arcs_ &&
         influence_ == other.influence_;
}

MonetizingNetwork build_network(std::vector<std::string> labels,
                                std::vector<Money> valuations,
                                std::span<const IndexedEdge> edges,
                                ConcaveInfluence influence) {
  const std::size_t n = labels.size();
  if (valuations.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(n) + " valuations, got " +
                    std::to_string(valuations.size()));
  }

  MonetizingNetwork net;
  net.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!net.index_.emplace(labels[i], static_cast<NodeId>(i)).second) {
      throw Error(ErrorCode::kDuplicateNode,
                  "node '" + labels[i] + "' listed twice");
    }
    if (!std::isfinite(valuations[i]) || valuations[i] < 0.0) {
      throw Error(ErrorCode::kNegativeValuation,
                  "node '" + labels[i] + "' has valuation " +
                      std::to_string(valuations[i]));
    }
  }

  std::vector<IndexedEdge> sorted(edges.begin(), edges.end());
  for (const auto& e : sorted) {
    if (e.source >= n || e.target >= n) {
      throw Error(ErrorCode::kUnknownNode, "edge references node index " +
                                               std::to_string(std::max(
                                                   e.source, e.target)));
    }
    if (e.source == e.target) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop on '" + labels[e.source] + "'");
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw Error(ErrorCode::kNegativeWeight,
                  "edge '" + labels[e.source] + "' -> '" + labels[e.target] +
                      "' has weight " + std::to_string(e.weight));
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].source == sorted[i - 1].source &&
        sorted[i].target == sorted[i - 1].target) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "edge '" + labels[sorted[i].source] + "' -> '" +
                      labels[sorted[i].target] + "' listed twice");
    }
  }

  net.out_offsets_.assign(n + 1, 0);
  net.in_offsets_.assign(n + 1, 0);
  for (const auto& e : sorted) {
    ++net.out_offsets_[e.source + 1];
    ++net.in_offsets_[e.target + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    net.out_offsets_[i + 1] += net.out_offsets_[i];
    net.in_offsets_[i + 1] += net.in_offsets_[i];
  }
  net.out_arcs_.resize(sorted.size());
  net.in_arcs_.resize(sorted.size());
  net.in_weight_totals_.assign(n, 0.0);
  std::vector<std::size_t> out_fill(net.out_offsets_.begin(),
                                    net.out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(net.in_offsets_.begin(),
                                   net.in_offsets_.end() - 1);
  // Sorted by (source, target): out lists come out ordered by target and in
  // lists ordered by source.
  for (const auto& e : sorted) {
    net.out_arcs_[out_fill[e.source]++] = {e.target, e.weight};
    net.in_arcs_[in_fill[e.target]++] = {e.source, e.weight};
    net.in_weight_totals_[e.target] += e.weight;
  }

  double max_in = 0.0;
  for (double w : net.in_weight_totals_) max_in = std::max(max_in, w);
  influence.validate(max_in);

  net.labels_ = std::move(labels);
  net.valuations_ = std::move(valuations);
  net.influence_ = std::move(influence);
  return net;
}

MonetizingNetwork build_network(std::vector<std::string> labels,
                                std::vector<Money> valuations,
                                std::span<const WeightedEdge> edges,
                                ConcaveInfluence influence) {
  std::unordered_map<std::string_view, NodeId> index;
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    index.emplace(labels[i], static_cast<NodeId>(i));
  }
  auto resolve = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) {
      throw Error(ErrorCode::kUnknownNode,
                  "edge references unknown node '" + label + "'");
    }
    return it->second;
  };
  std::vector<IndexedEdge> indexed;
  indexed.reserve(edges.size());
  for (const auto& e : edges) {
    indexed.push_back({resolve(e.source), resolve(e.target), e.weight});
  }
  return build_network(std::move(labels), std::move(valuations), indexed,
                       std::move(influence));
}

Money valuation_under(const MonetizingNetwork& net, NodeId v,
                      std::span<const NodeId> influencers) {
  net.check_node(v);
  std::vector<char> member(net.size(), 0);
  for (NodeId i : influencers) {
    net.check_node(i);
    member[i] = 1;
  }
  double sum = 0.0;
  for (const Arc& a : net.in_arcs(v)) {
    if (member[a.node]) sum += a.weight;
  }
  return net.inherent_valuation(v) + net.influence()(sum);
}

Money max_valuation(const MonetizingNetwork& net, NodeId v) {
  net.check_node(v);
  return net.inherent_valuation(v) + net.influence()(net.total_in_weight(v));
}

}  // namespace seedprice
