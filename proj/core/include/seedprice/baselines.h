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

#ifndef SEEDPRICE_BASELINES_H_
#define SEEDPRICE_BASELINES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "seedprice/model.h"
#include "seedprice/solver.h"

namespace seedprice {

// Seed-scoring rules compared against the importance-feedback heuristic.
// All but kNoSocial run inside the same greedy price framework.
enum class StrategyKind {
  kRandom,        // uniform among non-adopters
  kSumOfWeights,  // largest raw out-weight sum
  kAblationN,     // sum of w-hat_uv over all v
  kAblationF,     // sum of IF(u, v) over all v
  kAblationP,     // sum of w-hat_ui over potential buyers i
  kNoSocial,      // no seeds, adoption from inherent valuation only
};

std::string_view to_string(StrategyKind kind);

// Throws kMissingSeedForRandom when kind == kRandom and no seed is given,
// kInvalidQuantity when quantity == 0.
SolverResult solve_baseline(const MonetizingNetwork& net,
                            const PriceSet& prices, std::size_t quantity,
                            StrategyKind kind,
                            std::optional<std::uint64_t> rng_seed = {},
                            const SolverOptions& options = {});

// max over p of p * min(n, |{v : chi_v >= p}|) with no seeds; the lowest
// such price wins ties.
SolverResult solve_nosocial(const MonetizingNetwork& net,
                            const PriceSet& prices, std::size_t quantity);

}  // namespace seedprice

#endif  // SEEDPRICE_BASELINES_H_
