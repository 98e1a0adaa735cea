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

#include <cmath>
#include <vector>

#include "seedprice/error.h"
#include "seedprice/model.h"
#include "testing/fixtures.h"

namespace seedprice {
namespace {

using testing::fig1;
using testing::ids;

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvariantViolation;
}

TEST(PriceSet, IntegerRangeIsInclusive) {
  const PriceSet p = PriceSet::integer_range(1, 10);
  ASSERT_EQ(p.size(), 10u);
  EXPECT_EQ(p[0], 1.0);
  EXPECT_EQ(p[9], 10.0);
}

TEST(PriceSet, RejectsBadInput) {
  EXPECT_EQ(code_of([] { PriceSet({}); }), ErrorCode::kEmptyPriceSet);
  EXPECT_EQ(code_of([] { PriceSet({0.0, 1.0}); }), ErrorCode::kInvalidPriceSet);
  EXPECT_EQ(code_of([] { PriceSet({-2.0}); }), ErrorCode::kInvalidPriceSet);
  EXPECT_EQ(code_of([] { PriceSet({2.0, 2.0}); }), ErrorCode::kInvalidPriceSet);
  EXPECT_EQ(code_of([] { PriceSet({3.0, 2.0}); }), ErrorCode::kInvalidPriceSet);
  EXPECT_EQ(code_of([] { PriceSet({NAN}); }), ErrorCode::kInvalidPriceSet);
  EXPECT_EQ(code_of([] { PriceSet::integer_range(5, 4); }),
            ErrorCode::kEmptyPriceSet);
}

TEST(Influence, BuiltinsPassValidation) {
  EXPECT_NO_THROW(ConcaveInfluence::identity().validate(100));
  EXPECT_NO_THROW(ConcaveInfluence::sqrt().validate(100));
  EXPECT_NO_THROW(ConcaveInfluence::log1p().validate(100));
  EXPECT_DOUBLE_EQ(ConcaveInfluence::sqrt()(9.0), 3.0);
  EXPECT_DOUBLE_EQ(ConcaveInfluence::log1p()(0.0), 0.0);
}

TEST(Influence, FromNameRoundTrips) {
  for (const char* name : {"identity", "sqrt", "log1p"}) {
    EXPECT_EQ(ConcaveInfluence::from_name(name).name(), name);
  }
  EXPECT_THROW(ConcaveInfluence::from_name("square"), Error);
}

TEST(Influence, RejectsNonConcaveShapes) {
  auto square = ConcaveInfluence::custom("square", [](double x) { return x * x; });
  EXPECT_EQ(code_of([&] { square.validate(10); }), ErrorCode::kNotConcave);
  auto offset = ConcaveInfluence::custom("offset", [](double x) { return x + 1; });
  EXPECT_EQ(code_of([&] { offset.validate(10); }), ErrorCode::kNotConcave);
  auto falling = ConcaveInfluence::custom("falling", [](double x) { return -x; });
  EXPECT_EQ(code_of([&] { falling.validate(10); }), ErrorCode::kNotConcave);
}

TEST(Network, BuildRejectsInvalidGraphs) {
  using E = std::vector<WeightedEdge>;
  EXPECT_EQ(code_of([] { build_network({"a", "a"}, {1, 1}, E{}); }),
            ErrorCode::kDuplicateNode);
  EXPECT_EQ(code_of([] { build_network({"a"}, {-1}, E{}); }),
            ErrorCode::kNegativeValuation);
  EXPECT_EQ(code_of([] { build_network({"a"}, {1}, E{{"a", "z", 1}}); }),
            ErrorCode::kUnknownNode);
  EXPECT_EQ(code_of([] { build_network({"a"}, {1}, E{{"a", "a", 1}}); }),
            ErrorCode::kSelfLoop);
  EXPECT_EQ(code_of([] { build_network({"a", "b"}, {1, 1}, E{{"a", "b", -1}}); }),
            ErrorCode::kNegativeWeight);
  EXPECT_EQ(code_of([] {
              build_network({"a", "b"}, {1, 1}, E{{"a", "b", 1}, {"a", "b", 2}});
            }),
            ErrorCode::kDuplicateEdge);
  auto square = ConcaveInfluence::custom("square", [](double x) { return x * x; });
  EXPECT_EQ(code_of([&] {
              build_network({"a", "b"}, {1, 1}, E{{"a", "b", 3}}, square);
            }),
            ErrorCode::kNotConcave);
}

TEST(Network, AdjacencyAndLookup) {
  const auto net = fig1();
  EXPECT_EQ(net.size(), 6u);
  EXPECT_EQ(net.edge_count(), 12u);
  const NodeId d = net.index_of("d");
  EXPECT_EQ(net.weight(d, net.index_of("a")), 5.0);
  EXPECT_EQ(net.weight(net.index_of("a"), d), 0.0);
  EXPECT_EQ(net.out_arcs(d).size(), 3u);
  EXPECT_EQ(net.in_arcs(net.index_of("b")).size(), 3u);
  EXPECT_EQ(net.total_in_weight(net.index_of("b")), 10.0);
  EXPECT_FALSE(net.find("z").has_value());
  EXPECT_THROW(net.index_of("z"), Error);
  EXPECT_THROW(net.check_node(6), Error);
}

TEST(Network, ArcsSortedByNeighbour) {
  const auto net = fig1();
  for (NodeId u = 0; u < net.size(); ++u) {
    const auto arcs = net.out_arcs(u);
    for (std::size_t i = 1; i < arcs.size(); ++i) {
      EXPECT_LT(arcs[i - 1].node, arcs[i].node);
    }
  }
}

TEST(Network, MaxValuationsOfConcertExample) {
  const auto net = fig1();
  const std::vector<Money> expected = {8, 10, 9, 4, 7, 4};
  for (NodeId v = 0; v < net.size(); ++v) {
    EXPECT_EQ(max_valuation(net, v), expected[v]) << net.label(v);
  }
}

TEST(Network, ValuationUnderInfluencers) {
  const auto net = fig1();
  const NodeId b = net.index_of("b");
  EXPECT_EQ(valuation_under(net, b, ids(net, "d")), 4.0);
  EXPECT_EQ(valuation_under(net, b, ids(net, "d,e")), 8.0);
  EXPECT_EQ(valuation_under(net, b, ids(net, "d,d")), 4.0);
  EXPECT_EQ(valuation_under(net, b, ids(net, "c")), 0.0);
}

TEST(Network, EqualityIsStructural) {
  EXPECT_EQ(fig1(), fig1());
  const std::vector<WeightedEdge> edges = {{"a", "b", 2}};
  const auto x = build_network({"a", "b"}, {1, 2}, edges);
  const auto y = build_network({"a", "b"}, {1, 3}, edges);
  const auto z = build_network({"a", "b"}, {1, 2}, edges, ConcaveInfluence::sqrt());
  EXPECT_FALSE(x == y);
  EXPECT_FALSE(x == z);
}

}  // namespace
}  // namespace seedprice
