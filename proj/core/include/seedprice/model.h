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

#ifndef SEEDPRICE_MODEL_H_
#define SEEDPRICE_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace seedprice {

// Dense node index in [0, |V|).
using NodeId = std::uint32_t;

// Dollars. Non-negative wherever it appears in a network or result.
using Money = double;

// Absolute tolerance used when comparing money amounts in tests and
// invariant checks.
inline constexpr double kMoneyTolerance = 1e-9;

// Candidate prices, strictly ascending and positive.
class PriceSet {
 public:
  explicit PriceSet(std::vector<Money> prices);

  // All integers in [lo, hi].
  static PriceSet integer_range(long lo, long hi);

  std::span<const Money> values() const { return prices_; }
  std::size_t size() const { return prices_.size(); }
  Money operator[](std::size_t i) const { return prices_[i]; }
  auto begin() const { return prices_.begin(); }
  auto end() const { return prices_.end(); }

  bool operator==(const PriceSet&) const = default;

 private:
  std::vector<Money> prices_;
};

enum class InfluenceKind { kIdentity, kSqrt, kLog1p, kCustom };

// Maps accumulated in-weight to a valuation increment. Must satisfy F(0) = 0
// and be non-negative, non-decreasing and concave; custom functions are
// checked by sampling when a network is built.
class ConcaveInfluence {
 public:
  ConcaveInfluence() = default;  // identity

  static ConcaveInfluence identity() { return ConcaveInfluence(); }
  static ConcaveInfluence sqrt();
  static ConcaveInfluence log1p();
  static ConcaveInfluence custom(std::string name,
                                 std::function<double(double)> fn);
  // Accepts "identity", "sqrt" and "log1p".
  static ConcaveInfluence from_name(std::string_view name);

  double operator()(double x) const;

  InfluenceKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  // Samples 64 evenly spaced points on [0, max_x] and throws kNotConcave if
  // any of the required properties fails on that grid.
  void validate(double max_x) const;

  bool operator==(const ConcaveInfluence& other) const {
    return kind_ == other.kind_ && name_ == other.name_;
  }

 private:
  InfluenceKind kind_ = InfluenceKind::kIdentity;
  std::string name_ = "identity";
  std::function<double(double)> fn_;
};

struct Arc {
  NodeId node;
  double weight;
  bool operator==(const Arc&) const = default;
};

// Edge between external labels, as read from a file.
struct WeightedEdge {
  std::string source;
  std::string target;
  double weight = 1.0;
  bool operator==(const WeightedEdge&) const = default;
};

struct IndexedEdge {
  NodeId source;
  NodeId target;
  double weight;
};

// G = (V, X, E, W, F). Immutable once built; adjacency is kept in both
// directions, each list sorted by neighbour index.
class MonetizingNetwork {
 public:
  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const { return out_arcs_.size(); }

  std::span<const Arc> out_arcs(NodeId u) const {
    return {out_arcs_.data() + out_offsets_[u],
            out_arcs_.data() + out_offsets_[u + 1]};
  }
  std::span<const Arc> in_arcs(NodeId v) const {
    return {in_arcs_.data() + in_offsets_[v],
            in_arcs_.data() + in_offsets_[v + 1]};
  }

  // Weight of u -> v, or 0 when the edge does not exist.
  double weight(NodeId u, NodeId v) const;

  Money inherent_valuation(NodeId v) const { return valuations_[v]; }
  std::span<const Money> inherent_valuations() const { return valuations_; }
  double total_in_weight(NodeId v) const { return in_weight_totals_[v]; }

  const std::string& label(NodeId v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;
  // Throws kUnknownNode.
  NodeId index_of(std::string_view label) const;

  const ConcaveInfluence& influence() const { return influence_; }

  // Throws kUnknownNode when v is out of range.
  void check_node(NodeId v) const;

  // Structural equality: labels, valuations, arcs and influence kind.
  bool operator==(const MonetizingNetwork& other) const;

 private:
  friend MonetizingNetwork build_network(std::vector<std::string>,
                                         std::vector<Money>,
                                         std::span<const IndexedEdge>,
                                         ConcaveInfluence);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Money> valuations_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Arc> in_arcs_;
  std::vector<double> in_weight_totals_;
  ConcaveInfluence influence_;
};

// Validates and builds a network. Throws DuplicateNode, DuplicateEdge,
// SelfLoop, NegativeWeight, NegativeValuation, UnknownNode or NotConcave.
MonetizingNetwork build_network(std::vector<std::string> labels,
                                std::vector<Money> valuations,
                                std::span<const IndexedEdge> edges,
                                ConcaveInfluence influence = {});

// Label-based overload; every edge endpoint must appear in `labels`.
MonetizingNetwork build_network(std::vector<std::string> labels,
                                std::vector<Money> valuations,
                                std::span<const WeightedEdge> edges,
                                ConcaveInfluence influence = {});

// chi_v + F(sum of w_iv over i in influencers). Influencers without an edge
// into v contribute nothing; duplicates are counted once.
Money valuation_under(const MonetizingNetwork& net, NodeId v,
                      std::span<const NodeId> influencers);

// Valuation of v when every in-neighbour has adopted.
Money max_valuation(const MonetizingNetwork& net, NodeId v);

}  // namespace seedprice

#endif  // SEEDPRICE_MODEL_H_
