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

#include "seedprice/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "seedprice/error.h"

namespace seedprice {
namespace {

// Calls fn(line_number, line) for each non-blank, non-comment line.
template <class Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (line.front() == '#') continue;
    fn(line_no, line);
  }
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const std::size_t pos = line.find(sep);
    out.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() ||
      !std::isfinite(x)) {
    return std::nullopt;
  }
  return x;
}

template <class Int>
std::optional<Int> to_integer(std::string_view s) {
  s = trim(s);
  Int x{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return x;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kMalformedLine, what, line_no);
}

}  // namespace

std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string csv_field(std::string_view s) { return csv_escape(s); }

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(std::move(field));
  return out;
}

}  // namespace

std::vector<WeightedEdge> parse_edge_list(std::string_view text) {
  std::vector<WeightedEdge> edges;
  std::unordered_map<std::string, std::size_t> seen;
  for_each_record(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      malformed(line_no, "expected source<TAB>target[<TAB>weight]");
    }
    const std::string_view source = trim(fields[0]);
    const std::string_view target = trim(fields[1]);
    if (source.empty() || target.empty()) {
      malformed(line_no, "empty node label");
    }
    double weight = 1.0;
    if (fields.size() == 3) {
      const auto w = to_double(fields[2]);
      if (!w) malformed(line_no, "bad weight '" + std::string(fields[2]) + "'");
      if (*w < 0.0) {
        throw Error(ErrorCode::kNegativeWeight,
                    "weight " + std::string(trim(fields[2])) + " is negative",
                    line_no);
      }
      weight = *w;
    }
    std::string key;
    key.reserve(source.size() + target.size() + 1);
    key.append(source).push_back('\t');
    key.append(target);
    auto [it, inserted] = seen.emplace(std::move(key), edges.size());
    if (inserted) {
      edges.push_back({std::string(source), std::string(target), weight});
    } else {
      edges[it->second].weight += weight;
    }
  });
  return edges;
}

std::vector<std::pair<std::string, Money>> parse_valuations(
    std::string_view text) {
  std::vector<std::pair<std::string, Money>> out;
  std::unordered_map<std::string, std::size_t> seen;
  for_each_record(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split(line, '\t');
    if (fields.size() != 2) malformed(line_no, "expected node<TAB>valuation");
    const std::string_view label = trim(fields[0]);
    if (label.empty()) malformed(line_no, "empty node label");
    const auto x = to_double(fields[1]);
    if (!x) {
      malformed(line_no, "bad valuation '" + std::string(fields[1]) + "'");
    }
    if (*x < 0.0) {
      throw Error(ErrorCode::kNegativeValuation,
                  "node '" + std::string(label) + "' has negative valuation",
                  line_no);
    }
    if (!seen.emplace(std::string(label), out.size()).second) {
      throw Error(ErrorCode::kDuplicateNode,
                  "node '" + std::string(label) + "' listed twice", line_no);
    }
    out.emplace_back(std::string(label), *x);
  });
  return out;
}

MonetizingNetwork assemble_network(
    std::span<const WeightedEdge> edges,
    std::span<const std::pair<std::string, Money>> valuations,
    ConcaveInfluence influence) {
  std::vector<std::string> labels;
  std::vector<Money> chi;
  std::unordered_map<std::string, std::size_t> index;
  auto add_node = [&](const std::string& label, Money x) {
    if (index.emplace(label, labels.size()).second) {
      labels.push_back(label);
      chi.push_back(x);
    }
  };
  for (const auto& [label, x] : valuations) add_node(label, x);
  for (const auto& e : edges) {
    add_node(e.source, 0.0);
    add_node(e.target, 0.0);
  }
  return build_network(std::move(labels), std::move(chi), edges,
                       std::move(influence));
}

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_edge_list(const MonetizingNetwork& net) {
  std::string out;
  for (NodeId u = 0; u < net.size(); ++u) {
    for (const Arc& arc : net.out_arcs(u)) {
      out += net.label(u);
      out += '\t';
      out += net.label(arc.node);
      out += '\t';
      out += format_number(arc.weight);
      out += '\n';
    }
  }
  return out;
}

std::string format_valuations(const MonetizingNetwork& net) {
  std::string out;
  for (NodeId v = 0; v < net.size(); ++v) {
    out += net.label(v);
    out += '\t';
    out += format_number(net.inherent_valuation(v));
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoFailure,
                "cannot write '" + path.string() + "'");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw Error(ErrorCode::kIoFailure,
                "write to '" + path.string() + "' failed");
  }
}

MonetizingNetwork load_network(
    const std::filesystem::path& graph,
    const std::optional<std::filesystem::path>& valuations,
    ConcaveInfluence influence) {
  const auto edges = parse_edge_list(read_text_file(graph));
  std::vector<std::pair<std::string, Money>> chi;
  if (valuations) chi = parse_valuations(read_text_file(*valuations));
  return assemble_network(edges, chi, std::move(influence));
}

PriceSet parse_price_spec(std::string_view spec) {
  spec = trim(spec);
  if (const std::size_t dots = spec.find(".."); dots != std::string_view::npos) {
    const auto lo = to_integer<long>(spec.substr(0, dots));
    const auto hi = to_integer<long>(spec.substr(dots + 2));
    if (!lo || !hi) {
      throw Error(ErrorCode::kInvalidArgument,
                  "price range must be integer a..b, got '" +
                      std::string(spec) + "'");
    }
    return PriceSet::integer_range(*lo, *hi);
  }
  std::vector<Money> prices;
  for (std::string_view item : split(spec, ',')) {
    const auto p = to_double(item);
    if (!p) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad price '" + std::string(item) + "'");
    }
    prices.push_back(*p);
  }
  std::sort(prices.begin(), prices.end());
  return PriceSet(std::move(prices));
}

std::vector<double> parse_ratio_spec(std::string_view spec) {
  spec = trim(spec);
  auto bad = [&]() {
    throw Error(ErrorCode::kInvalidArgument,
                "bad ratio list '" + std::string(spec) + "'");
  };
  auto clean = [](double x) { return std::round(x * 1e9) / 1e9; };
  std::vector<double> out;
  if (const std::size_t dots = spec.find(".."); dots != std::string_view::npos) {
    std::string_view rest = spec.substr(dots + 2);
    double step = 0.05;
    if (const std::size_t colon = rest.find(':');
        colon != std::string_view::npos) {
      const auto s = to_double(rest.substr(colon + 1));
      if (!s || *s <= 0.0) bad();
      step = *s;
      rest = rest.substr(0, colon);
    }
    const auto lo = to_double(spec.substr(0, dots));
    const auto hi = to_double(rest);
    if (!lo || !hi || *lo > *hi) bad();
    const auto count =
        static_cast<std::size_t>(std::floor((*hi - *lo) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) out.push_back(clean(*lo + i * step));
  } else {
    for (std::string_view item : split(spec, ',')) {
      const auto r = to_double(item);
      if (!r) bad();
      out.push_back(clean(*r));
    }
  }
  for (double r : out) {
    if (!(r > 0.0 && r <= 1.0)) bad();
  }
  return out;
}

std::size_t quantity_for_ratio(double ratio, std::size_t nodes) {
  const auto n = static_cast<long long>(
      std::llround(ratio * static_cast<double>(nodes)));
  return static_cast<std::size_t>(
      std::clamp<long long>(n, 1, static_cast<long long>(std::max<std::size_t>(nodes, 1))));
}

ResultRow make_result_row(std::string solver, const MonetizingNetwork& net,
                          std::size_t quantity, const SolverResult& result) {
  ResultRow row;
  row.solver = std::move(solver);
  row.n = quantity;
  row.n_over_v = net.size() == 0 ? 0.0
                                  : std::round(static_cast<double>(quantity) /
                                               static_cast<double>(net.size()) *
                                               1e6) /
                                        1e6;
  row.p_max = result.price;
  row.revenue = result.revenue;
  for (std::size_t i = 0; i < result.seeds.size(); ++i) {
    if (i > 0) row.seed_set += ';';
    row.seed_set += net.label(result.seeds[i]);
  }
  row.prices_examined = result.stats.prices_examined;
  row.prices_pruned = result.stats.prices_pruned;
  row.groups_or_rounds_evaluated = result.stats.groups_evaluated;
  row.wall_time_ms = result.stats.wall_time_ms;
  return row;
}

std::string_view result_csv_header() {
  return "solver,n,n_over_V,p_max,revenue,seed_set,prices_examined,"
         "prices_pruned,groups_or_rounds_evaluated,wall_time_ms";
}

std::string format_result_row(const ResultRow& row, bool include_timing) {
  std::string out;
  out += csv_field(row.solver);
  out += ',' + std::to_string(row.n);
  out += ',' + format_number(row.n_over_v);
  out += ',' + format_number(row.p_max);
  out += ',' + format_number(row.revenue);
  out += ',' + csv_field(row.seed_set);
  out += ',' + std::to_string(row.prices_examined);
  out += ',' + std::to_string(row.prices_pruned);
  out += ',' + std::to_string(row.groups_or_rounds_evaluated);
  if (include_timing) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", row.wall_time_ms);
    out += ',';
    out += buf;
  } else {
    out += ",0";
  }
  return out;
}

ResultRow parse_result_row(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto f = split_csv(line);
  auto fail = [&]() -> ResultRow {
    throw Error(ErrorCode::kMalformedLine,
                "bad result row '" + std::string(line) + "'");
  };
  if (f.size() != 10) return fail();
  ResultRow row;
  row.solver = f[0];
  row.seed_set = f[5];
  const auto n = to_integer<std::size_t>(f[1]);
  const auto ratio = to_double(f[2]);
  const auto p = to_double(f[3]);
  const auto rev = to_double(f[4]);
  const auto examined = to_integer<std::size_t>(f[6]);
  const auto pruned = to_integer<std::size_t>(f[7]);
  const auto groups = to_integer<std::size_t>(f[8]);
  const auto ms = to_double(f[9]);
  if (!n || !ratio || !p || !rev || !examined || !pruned || !groups || !ms) {
    return fail();
  }
  row.n = *n;
  row.n_over_v = *ratio;
  row.p_max = *p;
  row.revenue = *rev;
  row.prices_examined = *examined;
  row.prices_pruned = *pruned;
  row.groups_or_rounds_evaluated = *groups;
  row.wall_time_ms = *ms;
  return row;
}

std::vector<NodeId> resolve_labels(const MonetizingNetwork& net,
                                   std::string_view joined, char separator) {
  std::vector<NodeId> out;
  if (trim(joined).empty()) return out;
  for (std::string_view label : split(joined, separator)) {
    out.push_back(net.index_of(trim(label)));
  }
  return out;
}

}  // namespace seedprice
