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

#ifndef SEEDPRICE_PRUBIF_H_
#define SEEDPRICE_PRUBIF_H_

#include <cstddef>

#include "seedprice/model.h"
#include "seedprice/solver.h"

namespace seedprice {

// Greedy heuristic on the exact solver's price framework. At each visited
// price it starts from the empty group and repeatedly seeds the non-adopter
// with the greatest pricing-sensitive importance (lowest index on ties) while
// |A| < n - r_global / p. Throws kInvalidQuantity when quantity == 0.
SolverResult solve_prubif(const MonetizingNetwork& net, const PriceSet& prices,
                          std::size_t quantity,
                          const SolverOptions& options = {});

}  // namespace seedprice

#endif  // SEEDPRICE_PRUBIF_H_
