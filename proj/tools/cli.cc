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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "bench.h"
#include "seedprice/cascade.h"
#include "seedprice/datagen.h"
#include "seedprice/error.h"
#include "seedprice/io.h"

namespace seedprice::cli {
namespace {

// Where the network and its valuations come from. Exactly one valuation
// source (file or distribution) must be named.
struct NetworkSource {
  std::string graph;
  std::string valuations;
  std::string distribution;
  std::string influence = "identity";
};

// Everything one solver run needs, resolved from the command line.
struct RunConfig {
  NetworkSource source;
  std::string prices;
  std::optional<std::size_t> quantity;
  std::optional<double> ratio;
  std::string solver = "prubif";
  std::uint64_t rng_seed = 0;
  std::string output;
  std::optional<unsigned> threads;
  bool omit_timing = false;
};

std::vector<std::string_view> split_view(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const std::size_t pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::vector<double> parse_numbers(std::string_view list,
                                  std::string_view what) {
  std::vector<double> out;
  for (std::string_view item : split_view(list, ',')) {
    std::string text(item);
    char* end = nullptr;
    const double x = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() ||
        !std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad number '" + text + "' in " + std::string(what));
    }
    out.push_back(x);
  }
  return out;
}

// "normal:MEAN,VAR" or "mshape:MEAN1,VAR1,MEAN2,VAR2".
ValuationDistribution parse_distribution(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? "" : spec.substr(colon + 1);
  const auto xs = parse_numbers(params, "--dist");
  if (kind == "normal" && xs.size() == 2) {
    return ValuationDistribution::normal(xs[0], xs[1]);
  }
  if (kind == "mshape" && xs.size() == 4) {
    return ValuationDistribution::m_shape(xs[0], xs[1], xs[2], xs[3]);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "expected --dist normal:MEAN,VAR or "
              "mshape:MEAN1,VAR1,MEAN2,VAR2, got '" +
                  std::string(spec) + "'");
}

// "uniform:LO..HI" or "powerlaw:EXPONENT[,MAX]".
WeightLaw parse_weight_law(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? "" : spec.substr(colon + 1);
  if (kind == "uniform") {
    const std::size_t dots = params.find("..");
    if (dots != std::string_view::npos) {
      const auto lo = parse_numbers(params.substr(0, dots), "--weights");
      const auto hi = parse_numbers(params.substr(dots + 2), "--weights");
      if (lo[0] == std::floor(lo[0]) && hi[0] == std::floor(hi[0])) {
        return UniformIntWeights{static_cast<long>(lo[0]),
                                 static_cast<long>(hi[0])};
      }
    }
  } else if (kind == "powerlaw") {
    const auto xs = parse_numbers(params, "--weights");
    if (xs.size() == 1) return PowerLawWeights{xs[0], 1000.0};
    if (xs.size() == 2) return PowerLawWeights{xs[0], xs[1]};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "expected --weights uniform:LO..HI or powerlaw:EXP[,MAX], got '" +
                  std::string(spec) + "'");
}

Topology parse_topology(std::string_view name) {
  if (name == "er") return Topology::kErdosRenyi;
  if (name == "chunglu") return Topology::kChungLu;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown topology '" + std::string(name) +
                  "' (expected er or chunglu)");
}

unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag) return std::max(1u, *flag);
  if (const char* env = std::getenv("SEEDPRICE_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<unsigned>(n);
    throw Error(ErrorCode::kInvalidArgument,
                "SEEDPRICE_THREADS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void add_network_options(CLI::App* cmd, NetworkSource& src) {
  cmd->add_option("--graph", src.graph, "Graph TSV: source<TAB>target[<TAB>weight]")
      ->required();
  cmd->add_option("--valuations", src.valuations,
                  "Valuation TSV: node<TAB>valuation");
  cmd->add_option("--dist", src.distribution,
                  "Sample valuations: normal:MEAN,VAR or mshape:M1,V1,M2,V2");
  cmd->add_option("--influence", src.influence,
                  "Concave influence function: identity, sqrt or log1p");
}

MonetizingNetwork load_source(const NetworkSource& src, std::uint64_t seed,
                              bool require_valuations) {
  const bool has_file = !src.valuations.empty();
  const bool has_dist = !src.distribution.empty();
  if (has_file && has_dist) {
    throw Error(ErrorCode::kInvalidArgument,
                "give either --valuations or --dist, not both");
  }
  if (require_valuations && !has_file && !has_dist) {
    throw Error(ErrorCode::kInvalidArgument,
                "a valuation source is required (--valuations or --dist)");
  }
  const auto influence = ConcaveInfluence::from_name(src.influence);
  const auto edges = parse_edge_list(read_text_file(src.graph));
  std::vector<std::pair<std::string, Money>> chi;
  if (has_file) chi = parse_valuations(read_text_file(src.valuations));
  if (!has_dist) return assemble_network(edges, chi, influence);

  const MonetizingNetwork shape = assemble_network(edges, chi, influence);
  const auto sampled = sample_valuations(
      parse_distribution(src.distribution), std::max<std::size_t>(shape.size(), 1),
      seed);
  chi.clear();
  for (NodeId v = 0; v < shape.size(); ++v) {
    chi.emplace_back(shape.label(v), sampled[v]);
  }
  return assemble_network(edges, chi, influence);
}

std::size_t resolve_quantity(const RunConfig& cfg, std::size_t nodes) {
  if (cfg.quantity.has_value() == cfg.ratio.has_value()) {
    throw Error(ErrorCode::kInvalidQuantity,
                "give exactly one of --n and --ratio");
  }
  const std::size_t n =
      cfg.quantity ? *cfg.quantity : quantity_for_ratio(*cfg.ratio, nodes);
  if (n < 1 || n > nodes) {
    throw Error(ErrorCode::kInvalidQuantity,
                "quantity " + std::to_string(n) + " outside [1, " +
                    std::to_string(nodes) + "]");
  }
  return n;
}

// Replays a reported solution: nosocial against inherent valuations alone,
// everything else through the reference cascade.
void check_replay(const MonetizingNetwork& net, std::string_view solver,
                  std::size_t quantity, const SolverResult& result) {
  if (result.seeds.empty() && result.price == 0.0) {
    if (result.revenue != 0.0) {
      throw Error(ErrorCode::kInvariantViolation,
                  "empty solution reports revenue");
    }
    return;
  }
  Money replayed = 0.0;
  if (solver == "nosocial") {
    std::size_t buyers = 0;
    for (NodeId v = 0; v < net.size(); ++v) {
      if (net.inherent_valuation(v) >= result.price) ++buyers;
    }
    replayed = result.price * static_cast<Money>(std::min(buyers, quantity));
  } else {
    replayed = revenue(net, quantity, result.price, result.seeds);
  }
  if (std::abs(replayed - result.revenue) > kMoneyTolerance) {
    throw Error(ErrorCode::kInvariantViolation,
                "reported revenue " + format_number(result.revenue) +
                    " but replay gives " + format_number(replayed));
  }
}

void emit(const std::string& path, const std::string& text,
          std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const MonetizingNetwork net = load_source(cfg.source, cfg.rng_seed, true);
  const std::size_t n = resolve_quantity(cfg, net.size());
  const PriceSet prices =
      cfg.prices.empty() ? default_prices(net) : parse_price_spec(cfg.prices);
  SolverOptions options;
  options.threads = resolve_threads(cfg.threads);
  const SolverResult result =
      run_solver(cfg.solver, net, prices, n, cfg.rng_seed, options);
  check_replay(net, cfg.solver, n, result);
  const ResultRow row = make_result_row(cfg.solver, net, n, result);
  std::string csv(result_csv_header());
  csv += '\n';
  csv += format_result_row(row, !cfg.omit_timing);
  csv += '\n';
  emit(cfg.output, csv, out);
  if (!cfg.output.empty() && cfg.output != "-") out << csv;
  return kExitOk;
}

struct CascadeArgs {
  NetworkSource source;
  double price = 0.0;
  std::string seeds;
  std::optional<std::size_t> quantity;
  std::uint64_t rng_seed = 0;
};

std::string join_labels(const MonetizingNetwork& net,
                        const std::vector<NodeId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ';';
    out += net.label(ids[i]);
  }
  return out;
}

int cmd_cascade(const CascadeArgs& args, std::ostream& out) {
  const MonetizingNetwork net = load_source(args.source, args.rng_seed, true);
  if (!(args.price > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "--price must be positive");
  }
  const std::vector<NodeId> seeds = resolve_labels(net, args.seeds, ',');
  const std::size_t n = args.quantity.value_or(net.size());
  const CascadeResult cascade = run_cascade(net, args.price, seeds);
  const Money rev = revenue(net, n, args.price, seeds);

  std::vector<char> is_seed(net.size(), 0);
  for (NodeId s : seeds) is_seed[s] = 1;
  std::vector<NodeId> paying;
  for (NodeId v : cascade.adopters) {
    if (!is_seed[v]) paying.push_back(v);
  }
  std::vector<NodeId> sorted_seeds = seeds;
  std::sort(sorted_seeds.begin(), sorted_seeds.end());
  sorted_seeds.erase(std::unique(sorted_seeds.begin(), sorted_seeds.end()),
                     sorted_seeds.end());

  out << "price\t" << format_number(args.price) << '\n'
      << "n\t" << n << '\n'
      << "seeds\t" << join_labels(net, sorted_seeds) << '\n'
      << "adopters\t" << join_labels(net, cascade.adopters) << '\n'
      << "paying\t" << join_labels(net, paying) << '\n'
      << "rounds\t" << cascade.rounds << '\n'
      << "revenue\t" << format_number(rev) << '\n'
      << "# node\tfinal_valuation\tadopted\n";
  for (NodeId v = 0; v < net.size(); ++v) {
    out << net.label(v) << '\t' << format_number(cascade.final_valuation[v])
        << '\t' << (cascade.contains(v) ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

int cmd_validate(const NetworkSource& src, std::ostream& out) {
  const MonetizingNetwork net = load_source(src, 0, false);
  double total_weight = 0.0;
  for (NodeId v = 0; v < net.size(); ++v) total_weight += net.total_in_weight(v);
  out << "ok\tnodes=" << net.size() << "\tedges=" << net.edge_count()
      << "\ttotal_weight=" << format_number(total_weight)
      << "\tinfluence=" << net.influence().name() << '\n';
  return kExitOk;
}

struct GenArgs {
  std::size_t nodes = 200;
  double edge_probability = 0.02;
  std::string weights = "uniform:1..5";
  std::string distribution = "normal:5,2.04";
  std::string topology = "er";
  double degree_exponent = 2.5;
  std::uint64_t rng_seed = 0;
  std::string graph_out;
  std::string valuations_out;
};

InstanceSpec make_spec(const GenArgs& args) {
  InstanceSpec spec;
  spec.node_count = args.nodes;
  spec.edge_probability = args.edge_probability;
  spec.weights = parse_weight_law(args.weights);
  spec.valuations = parse_distribution(args.distribution);
  spec.topology = parse_topology(args.topology);
  spec.degree_exponent = args.degree_exponent;
  spec.rng_seed = args.rng_seed;
  return spec;
}

int cmd_gen(const GenArgs& args, std::ostream& out) {
  const MonetizingNetwork net = generate_instance(make_spec(args));
  write_text_file(args.graph_out, format_edge_list(net));
  write_text_file(args.valuations_out, format_valuations(net));
  out << "wrote " << net.size() << " nodes, " << net.edge_count()
      << " edges\n";
  return kExitOk;
}

struct BenchArgs {
  NetworkSource source;
  GenArgs gen;
  bool generate = false;
  std::string solvers = "prubif,sumweights,random";
  std::string ratios = "0.05..0.3";
  std::string prices;
  std::string output;
  std::string table;
  std::string curves;
  std::optional<unsigned> threads;
  bool omit_timing = false;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  MonetizingNetwork net =
      args.generate ? generate_instance(make_spec(args.gen))
                    : load_source(args.source, args.gen.rng_seed, true);
  BenchConfig config;
  for (std::string_view s : split_view(args.solvers, ',')) {
    if (!s.empty()) config.solvers.emplace_back(s);
  }
  if (config.solvers.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no solvers given");
  }
  for (const auto& s : config.solvers) {
    const auto names = solver_names();
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown solver '" + s + "'");
    }
  }
  config.ratios = parse_ratio_spec(args.ratios);
  if (!args.prices.empty()) config.prices = parse_price_spec(args.prices);
  config.rng_seed = args.gen.rng_seed;
  config.threads = resolve_threads(args.threads);

  const std::vector<ResultRow> rows = run_bench(net, config);
  for (const ResultRow& row : rows) {
    SolverResult replay;
    replay.price = row.p_max;
    replay.revenue = row.revenue;
    replay.seeds = resolve_labels(net, row.seed_set, ';');
    check_replay(net, row.solver, row.n, replay);
  }
  std::string csv(result_csv_header());
  csv += '\n';
  for (const ResultRow& row : rows) {
    csv += format_result_row(row, !args.omit_timing);
    csv += '\n';
  }
  emit(args.output, csv, out);

  const std::string table = format_ratio_table(rows);
  if (!args.table.empty()) write_text_file(args.table, table);
  if (!args.output.empty() && args.output != "-") out << table;
  else err << table;

  if (!args.curves.empty()) {
    std::vector<std::size_t> quantities;
    for (double r : config.ratios) {
      const std::size_t n = quantity_for_ratio(r, net.size());
      if (std::find(quantities.begin(), quantities.end(), n) ==
          quantities.end()) {
        quantities.push_back(n);
      }
    }
    const PriceSet prices = config.prices ? *config.prices : default_prices(net);
    write_text_file(args.curves,
                    per_price_curves(net, prices, quantities, config.threads));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Revenue maximization with a quantity constraint on "
               "monetizing social networks"};
  app.name(args.empty() ? "seedprice" : args.front());
  app.require_subcommand(1);

  std::vector<std::string> known_solvers;
  for (std::string_view s : solver_names()) known_solvers.emplace_back(s);

  RunConfig solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one solver");
  add_network_options(solve_cmd, solve.source);
  solve_cmd->add_option("--prices", solve.prices,
                        "a..b (integers) or comma list; default 1..ceil(max X_max)");
  solve_cmd->add_option("--n", solve.quantity, "Commodity quantity");
  solve_cmd->add_option("--ratio", solve.ratio, "Quantity as a fraction of |V|");
  solve_cmd->add_option("--solver", solve.solver, "Solver name")
      ->check(CLI::IsMember(known_solvers));
  solve_cmd->add_option("--seed", solve.rng_seed, "Random seed");
  solve_cmd->add_option("--output", solve.output, "Write the result CSV here");
  solve_cmd->add_option("--threads", solve.threads, "Worker threads");
  solve_cmd->add_flag("--omit-timing", solve.omit_timing,
                      "Write wall_time_ms as 0 for reproducible output");

  BenchArgs bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "Sweep solvers over quantity ratios");
  bench_cmd->add_option("--graph", bench.source.graph, "Graph TSV");
  bench_cmd->add_option("--valuations", bench.source.valuations, "Valuation TSV");
  bench_cmd->add_option("--dist", bench.source.distribution,
                        "Valuation distribution for --graph or --nodes");
  bench_cmd->add_option("--influence", bench.source.influence,
                        "identity, sqrt or log1p");
  bench_cmd->add_option("--nodes", bench.gen.nodes,
                        "Generate an instance with this many nodes instead of --graph");
  bench_cmd->add_option("--edge-prob", bench.gen.edge_probability,
                        "Edge probability (er) or density (chunglu)");
  bench_cmd->add_option("--weights", bench.gen.weights,
                        "uniform:LO..HI or powerlaw:EXP[,MAX]");
  bench_cmd->add_option("--topology", bench.gen.topology, "er or chunglu");
  bench_cmd->add_option("--degree-exponent", bench.gen.degree_exponent,
                        "Chung-Lu degree exponent");
  bench_cmd->add_option("--solver", bench.solvers, "Comma-separated solvers");
  bench_cmd->add_option("--ratios", bench.ratios,
                        "a..b[:step] or comma list of n/|V|");
  bench_cmd->add_option("--prices", bench.prices, "a..b or comma list");
  bench_cmd->add_option("--seed", bench.gen.rng_seed, "Random seed");
  bench_cmd->add_option("--output", bench.output, "Results CSV path");
  bench_cmd->add_option("--table", bench.table,
                        "Revenue-ratio-to-nosocial table path");
  bench_cmd->add_option("--curves", bench.curves,
                        "Per-price exhaustive revenue curves path (<= 25 nodes)");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads");
  bench_cmd->add_flag("--omit-timing", bench.omit_timing,
                      "Write wall_time_ms as 0 for reproducible output");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--nodes", gen.nodes, "Node count")->required();
  gen_cmd->add_option("--edge-prob", gen.edge_probability, "Edge probability");
  gen_cmd->add_option("--weights", gen.weights, "uniform:LO..HI or powerlaw:EXP[,MAX]");
  gen_cmd->add_option("--dist", gen.distribution,
                      "normal:MEAN,VAR or mshape:M1,V1,M2,V2");
  gen_cmd->add_option("--topology", gen.topology, "er or chunglu");
  gen_cmd->add_option("--degree-exponent", gen.degree_exponent,
                      "Chung-Lu degree exponent");
  gen_cmd->add_option("--seed", gen.rng_seed, "Random seed");
  gen_cmd->add_option("--graph-out", gen.graph_out, "Graph TSV path")->required();
  gen_cmd->add_option("--valuations-out", gen.valuations_out,
                      "Valuation TSV path")
      ->required();

  NetworkSource validate;
  auto* validate_cmd =
      app.add_subcommand("validate", "Check a network against the model invariants");
  add_network_options(validate_cmd, validate);

  CascadeArgs cascade;
  auto* cascade_cmd = app.add_subcommand(
      "cascade", "Print sigma(A) and the revenue for an explicit price and seed group");
  add_network_options(cascade_cmd, cascade.source);
  cascade_cmd->add_option("--price", cascade.price, "Price")->required();
  cascade_cmd->add_option("--seeds", cascade.seeds, "Comma-separated seed labels");
  cascade_cmd->add_option("--n", cascade.quantity, "Quantity (default |V|)");
  cascade_cmd->add_option("--seed", cascade.rng_seed,
                          "Random seed for --dist sampling");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*bench_cmd) {
      bench.generate = bench.source.graph.empty();
      if (bench.generate && !bench.source.distribution.empty()) {
        bench.gen.distribution = bench.source.distribution;
      }
      return cmd_bench(bench, out, err);
    }
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*validate_cmd) return cmd_validate(validate, out);
    if (*cascade_cmd) return cmd_cascade(cascade, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kInvariantViolation ? kExitInternalError
                                                      : kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitInputError;
}

}  // namespace seedprice::cli
