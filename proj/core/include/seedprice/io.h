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

#ifndef SEEDPRICE_IO_H_
#define SEEDPRICE_IO_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seedprice/model.h"
#include "seedprice/solver.h"

namespace seedprice {

// Graph TSV: one `source<TAB>target[<TAB>weight]` per line, weight defaults
// to 1, `#` lines and blank lines are skipped. Repeated (source, target)
// pairs are merged by summing their weights; edges keep first-appearance
// order. Throws kMalformedLine / kNegativeWeight with the line number.
std::vector<WeightedEdge> parse_edge_list(std::string_view text);

// Valuation TSV: one `node<TAB>valuation` per line, same comment rules.
// Throws kMalformedLine, kNegativeValuation or kDuplicateNode.
std::vector<std::pair<std::string, Money>> parse_valuations(
    std::string_view text);

// Node order: valuation entries first, then edge endpoints in order of first
// appearance. Nodes without a valuation get 0.
MonetizingNetwork assemble_network(
    std::span<const WeightedEdge> edges,
    std::span<const std::pair<std::string, Money>> valuations,
    ConcaveInfluence influence = {});

// Writers producing text the parsers above read back to an equal network.
std::string format_edge_list(const MonetizingNetwork& net);
std::string format_valuations(const MonetizingNetwork& net);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Reads a graph file plus an optional valuation file.
MonetizingNetwork load_network(
    const std::filesystem::path& graph,
    const std::optional<std::filesystem::path>& valuations,
    ConcaveInfluence influence = {});

// Shortest decimal text that parses back to the same double.
std::string format_number(double x);

// "a..b" (all integers in [a, b]) or a comma-separated list.
PriceSet parse_price_spec(std::string_view spec);

// "a..b" with step 0.05, "a..b:step", or a comma-separated list. Values are
// rounded to 1e-9 so generated ratios print cleanly.
std::vector<double> parse_ratio_spec(std::string_view spec);

// Quantity for a ratio n/|V|: round(ratio * |V|) clamped to [1, |V|].
std::size_t quantity_for_ratio(double ratio, std::size_t nodes);

// One results-CSV record.
struct ResultRow {
  std::string solver;
  std::size_t n = 0;
  double n_over_v = 0.0;
  Money p_max = 0.0;
  Money revenue = 0.0;
  std::string seed_set;  // labels joined with ';'
  std::size_t prices_examined = 0;
  std::size_t prices_pruned = 0;
  std::size_t groups_or_rounds_evaluated = 0;
  double wall_time_ms = 0.0;
};

ResultRow make_result_row(std::string solver, const MonetizingNetwork& net,
                          std::size_t quantity, const SolverResult& result);

// Fixed column order:
// solver,n,n_over_V,p_max,revenue,seed_set,prices_examined,prices_pruned,
// groups_or_rounds_evaluated,wall_time_ms
std::string_view result_csv_header();

// Without timing the wall_time_ms field is written as 0, which makes the
// output byte-for-byte reproducible.
std::string format_result_row(const ResultRow& row, bool include_timing = true);

// Inverse of format_result_row; throws kMalformedLine.
ResultRow parse_result_row(std::string_view line);

// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_escape(std::string_view field);

// Splits "a;b" seed-set text and resolves each label.
std::vector<NodeId> resolve_labels(const MonetizingNetwork& net,
                                   std::string_view joined, char separator);

}  // namespace seedprice

#endif  // SEEDPRICE_IO_H_
