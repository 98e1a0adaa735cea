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

#ifndef SEEDPRICE_TOOLS_BENCH_H_
#define SEEDPRICE_TOOLS_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seedprice/io.h"
#include "seedprice/model.h"
#include "seedprice/solver.h"

namespace seedprice::cli {

// Solver names accepted on the command line.
std::vector<std::string_view> solver_names();

// Dispatches by name. `rng_seed` feeds the random strategy. Throws
// kInvalidArgument for unknown names.
SolverResult run_solver(std::string_view name, const MonetizingNetwork& net,
                        const PriceSet& prices, std::size_t quantity,
                        std::uint64_t rng_seed, const SolverOptions& options);

// 1..ceil(max X_max), at least {1}.
PriceSet default_prices(const MonetizingNetwork& net);

struct BenchConfig {
  std::vector<std::string> solvers;
  std::vector<double> ratios;
  std::optional<PriceSet> prices;
  std::uint64_t rng_seed = 0;
  unsigned threads = 1;
};

// One row per (ratio, solver), ratios outer. A nosocial row is added for
// each ratio when not requested, since the ratio table needs it.
std::vector<ResultRow> run_bench(const MonetizingNetwork& net,
                                 const BenchConfig& config);

// Revenue of each solver divided by the nosocial revenue at the same ratio.
// CSV: n_over_V followed by one column per non-nosocial solver; empty cells
// where nosocial earns nothing.
std::string format_ratio_table(const std::vector<ResultRow>& rows);

// Exhaustive best revenue at every price for each quantity, as CSV
// `n,price,revenue,seed_set`. Throws kInstanceTooLarge above 25 nodes.
std::string per_price_curves(const MonetizingNetwork& net,
                             const PriceSet& prices,
                             const std::vector<std::size_t>& quantities,
                             unsigned threads);

inline constexpr std::size_t kCurveMaxNodes = 25;

}  // namespace seedprice::cli

#endif  // SEEDPRICE_TOOLS_BENCH_H_
