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

#ifndef SEEDPRICE_TESTS_TESTING_FIXTURES_H_
#define SEEDPRICE_TESTS_TESTING_FIXTURES_H_

#include <string>
#include <string_view>
#include <vector>

#include "seedprice/model.h"

namespace seedprice::testing {

// Six-person concert example: valuations a..f = 2,0,3,1,2,0, F(x) = x.
inline MonetizingNetwork fig1() {
  const std::vector<WeightedEdge> edges = {
      {"a", "b", 2}, {"a", "c", 3}, {"b", "a", 1}, {"b", "f", 2},
      {"c", "d", 3}, {"d", "b", 4}, {"d", "f", 2}, {"d", "a", 5},
      {"e", "b", 4}, {"e", "c", 2}, {"f", "c", 1}, {"f", "e", 5}};
  return build_network({"a", "b", "c", "d", "e", "f"}, {2, 0, 3, 1, 2, 0},
                       edges);
}

// Three-node pricing exception: valuations a,b,c = 1,3,3; a -> b, c -> b.
inline MonetizingNetwork fig8() {
  const std::vector<WeightedEdge> edges = {{"a", "b", 2}, {"c", "b", 2}};
  return build_network({"a", "b", "c"}, {1, 3, 3}, edges);
}

inline PriceSet prices_1_to_10() { return PriceSet::integer_range(1, 10); }

// "d,f" -> node ids.
inline std::vector<NodeId> ids(const MonetizingNetwork& net,
                               std::string_view labels) {
  std::vector<NodeId> out;
  while (!labels.empty()) {
    const auto comma = labels.find(',');
    out.push_back(net.index_of(labels.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    labels.remove_prefix(comma + 1);
  }
  return out;
}

inline std::string names(const MonetizingNetwork& net,
                         const std::vector<NodeId>& nodes) {
  std::string out;
  for (NodeId v : nodes) {
    if (!out.empty()) out += ',';
    out += net.label(v);
  }
  return out;
}

}  // namespace seedprice::testing

#endif  // SEEDPRICE_TESTS_TESTING_FIXTURES_H_
