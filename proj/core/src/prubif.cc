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

#include "seedprice/prubif.h"

#include "greedy_search.h"
#include "seedprice/importance.h"

namespace seedprice {

SolverResult solve_prubif(const MonetizingNetwork& net, const PriceSet& prices,
                          std::size_t quantity, const SolverOptions& options) {
  internal::ScoringSelector selector(
      net.size(), options.threads,
      [](const ImportanceState& state, NodeId u, FeedbackWorkspace& ws) {
        return pricing_sensitive_importance(state, u, ws);
      });
  return internal::greedy_price_search(net, prices, quantity, selector,
                                       options);
}

}  // namespace seedprice
