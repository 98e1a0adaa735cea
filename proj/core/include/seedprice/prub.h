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

#ifndef SEEDPRICE_PRUB_H_
#define SEEDPRICE_PRUB_H_

#include <cstddef>
#include <vector>

#include "seedprice/model.h"
#include "seedprice/solver.h"

namespace seedprice {

// Exact optimum of R(n, p, A) over p in `prices` and |A| <= n.
//
// Prices are visited in descending R_bound(n, p) (ascending price among
// ties); the search stops at the first price whose bound does not exceed the
// best revenue so far. At each visited price, seed groups are enumerated by
// ascending size starting from the empty group, lexicographically within a
// size, and a size is only entered while k < n - r_global / p. Only strict
// improvements replace the incumbent, so the reported optimum is the first
// one met in that canonical order.
//
// Throws kInvalidQuantity when quantity == 0.
SolverResult solve_prub(const MonetizingNetwork& net, const PriceSet& prices,
                        std::size_t quantity, const SolverOptions& options = {});

// Exhaustive search with no pruning, visiting the same canonical order as
// solve_prub. Testing oracle; throws kInstanceTooLarge above 20 nodes.
SolverResult solve_bruteforce(const MonetizingNetwork& net,
                              const PriceSet& prices, std::size_t quantity);

inline constexpr std::size_t kBruteforceMaxNodes = 20;

struct PriceOptimum {
  std::vector<NodeId> seeds;
  Money revenue = 0.0;
};

// Best seed group at a single price, sizes 0..size_cap, with the seed-size
// bound driven by the best revenue found at this price alone. Throws
// kInvalidQuantity when size_cap > quantity.
PriceOptimum per_price_best(const MonetizingNetwork& net, Money price,
                            std::size_t quantity, std::size_t size_cap,
                            unsigned threads = 1);

}  // namespace seedprice

#endif  // SEEDPRICE_PRUB_H_
