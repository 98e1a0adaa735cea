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

#include "bench.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "seedprice/baselines.h"
#include "seedprice/error.h"
#include "seedprice/prub.h"
#include "seedprice/prubif.h"

namespace seedprice::cli {

std::vector<std::string_view> solver_names() {
  return {"prub",       "prubif",     "bruteforce", "random",  "sumweights",
          "ablation-n", "ablation-f", "ablation-p", "nosocial"};
}

SolverResult run_solver(std::string_view name, const MonetizingNetwork& net,
                        const PriceSet& prices, std::size_t quantity,
                        std::uint64_t rng_seed, const SolverOptions& options) {
  if (name == "prub") return solve_prub(net, prices, quantity, options);
  if (name == "prubif") return solve_prubif(net, prices, quantity, options);
  if (name == "bruteforce") return solve_bruteforce(net, prices, quantity);
  if (name == "nosocial") return solve_nosocial(net, prices, quantity);
  static const std::map<std::string_view, StrategyKind> kinds = {
      {"random", StrategyKind::kRandom},
      {"sumweights", StrategyKind::kSumOfWeights},
      {"ablation-n", StrategyKind::kAblationN},
      {"ablation-f", StrategyKind::kAblationF},
      {"ablation-p", StrategyKind::kAblationP},
  };
  if (auto it = kinds.find(name); it != kinds.end()) {
    return solve_baseline(net, prices, quantity, it->second, rng_seed,
                          options);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown solver '" + std::string(name) + "'");
}

PriceSet default_prices(const MonetizingNetwork& net) {
  double top = 1.0;
  for (NodeId v = 0; v < net.size(); ++v) {
    top = std::max(top, max_valuation(net, v));
  }
  return PriceSet::integer_range(1, static_cast<long>(std::ceil(top)));
}

std::vector<ResultRow> run_bench(const MonetizingNetwork& net,
                                 const BenchConfig& config) {
  const PriceSet prices = config.prices ? *config.prices : default_prices(net);
  std::vector<std::string> solvers = config.solvers;
  if (std::find(solvers.begin(), solvers.end(), "nosocial") == solvers.end()) {
    solvers.push_back("nosocial");
  }
  SolverOptions options;
  options.threads = config.threads;
  std::vector<ResultRow> rows;
  for (double ratio : config.ratios) {
    const std::size_t n = quantity_for_ratio(ratio, net.size());
    for (const std::string& solver : solvers) {
      const SolverResult result =
          run_solver(solver, net, prices, n, config.rng_seed, options);
      rows.push_back(make_result_row(solver, net, n, result));
    }
  }
  return rows;
}

std::string format_ratio_table(const std::vector<ResultRow>& rows) {
  std::vector<std::string> solvers;
  std::vector<double> ratios;
  std::map<std::pair<double, std::string>, Money> revenue;
  for (const ResultRow& row : rows) {
    if (row.solver != "nosocial" &&
        std::find(solvers.begin(), solvers.end(), row.solver) ==
            solvers.end()) {
      solvers.push_back(row.solver);
    }
    if (std::find(ratios.begin(), ratios.end(), row.n_over_v) ==
        ratios.end()) {
      ratios.push_back(row.n_over_v);
    }
    revenue[{row.n_over_v, row.solver}] = row.revenue;
  }
  std::string out = "n_over_V";
  for (const auto& s : solvers) out += "," + s;
  out += '\n';
  for (double r : ratios) {
    out += format_number(r);
    const auto base = revenue.find({r, "nosocial"});
    for (const auto& s : solvers) {
      out += ',';
      const auto it = revenue.find({r, s});
      if (it == revenue.end() || base == revenue.end() ||
          base->second <= 0.0) {
        continue;
      }
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.4f", it->second / base->second);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string per_price_curves(const MonetizingNetwork& net,
                             const PriceSet& prices,
                             const std::vector<std::size_t>& quantities,
                             unsigned threads) {
  if (net.size() > kCurveMaxNodes) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "per-price curves use exhaustive search and are limited to " +
                    std::to_string(kCurveMaxNodes) + " nodes");
  }
  std::string out = "n,price,revenue,seed_set\n";
  for (std::size_t n : quantities) {
    for (Money p : prices) {
      const PriceOptimum best = per_price_best(net, p, n, n, threads);
      out += std::to_string(n) + ',' + format_number(p) + ',' +
             format_number(best.revenue) + ',';
      std::string seeds;
      for (std::size_t i = 0; i < best.seeds.size(); ++i) {
        if (i > 0) seeds += ';';
        seeds += net.label(best.seeds[i]);
      }
      out += csv_escape(seeds) + '\n';
    }
  }
  return out;
}

}  // namespace seedprice::cli
