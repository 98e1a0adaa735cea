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

#ifndef SEEDPRICE_SRC_GREEDY_SEARCH_H_
#define SEEDPRICE_SRC_GREEDY_SEARCH_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "seedprice/importance.h"
#include "seedprice/model.h"
#include "seedprice/solver.h"

namespace seedprice::internal {

class SeedSelector {
 public:
  virtual ~SeedSelector() = default;
  // Next seed among the non-adopters of `state`, or nullopt when none is left.
  virtual std::optional<NodeId> select(const ImportanceState& state) = 0;
};

// Scores every non-adopter and picks the highest score, lowest index on ties.
// Scores are computed in parallel; the choice does not depend on `threads`.
class ScoringSelector final : public SeedSelector {
 public:
  using Score =
      std::function<double(const ImportanceState&, NodeId, FeedbackWorkspace&)>;

  ScoringSelector(std::size_t nodes, unsigned threads, Score score);

  std::optional<NodeId> select(const ImportanceState& state) override;

 private:
  Score score_;
  std::vector<FeedbackWorkspace> workspaces_;
  std::vector<double> scores_;
};

// Shared outer loop of the greedy strategies: bound table, descending-bound
// price order, stop at the first non-candidate price, evaluate the empty
// group, then add one selected seed at a time while |A| < n - r_global / p.
SolverResult greedy_price_search(const MonetizingNetwork& net,
                                 const PriceSet& prices, std::size_t quantity,
                                 SeedSelector& selector,
                                 const SolverOptions& options);

}  // namespace seedprice::internal

#endif  // SEEDPRICE_SRC_GREEDY_SEARCH_H_
