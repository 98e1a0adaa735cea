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

#ifndef SEEDPRICE_SOLVER_H_
#define SEEDPRICE_SOLVER_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "seedprice/model.h"

namespace seedprice {

struct SearchStats {
  std::size_t prices_examined = 0;
  std::size_t prices_pruned = 0;
  // Seed groups whose revenue was evaluated (exact solvers) or greedy
  // evaluation rounds (heuristics).
  std::size_t groups_evaluated = 0;
  double wall_time_ms = 0.0;
};

// Best (price, seed group) found. When nothing earns revenue the result is
// price 0, no seeds, revenue 0.
struct SolverResult {
  Money price = 0.0;
  std::vector<NodeId> seeds;  // ascending
  Money revenue = 0.0;
  SearchStats stats;
};

enum class SearchEventKind {
  kPriceVisited,    // price passed the bound check
  kGroupEvaluated,  // a seed group's revenue was computed
  kImproved,        // r_global strictly increased
  kStopped,         // remaining prices are non-candidates
};

struct SearchEvent {
  SearchEventKind kind;
  Money price = 0.0;
  // Seed group in selection order (heuristics) or ascending (exact search).
  std::span<const NodeId> seeds;
  Money revenue = 0.0;
  Money r_global = 0.0;
};

struct SolverOptions {
  // Worker threads used inside one price; results do not depend on it.
  unsigned threads = 1;
  // Called synchronously, in canonical search order.
  std::function<void(const SearchEvent&)> observer;
};

}  // namespace seedprice

#endif  // SEEDPRICE_SOLVER_H_
