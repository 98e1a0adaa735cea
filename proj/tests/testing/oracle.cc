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

#include "testing/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace seedprice::testing {
namespace {

constexpr double kSaturation = 1.0 - 1e-12;

std::vector<NodeId> mask_to_nodes(std::uint32_t mask, std::size_t n) {
  std::vector<NodeId> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (mask & (1u << v)) out.push_back(static_cast<NodeId>(v));
  }
  return out;
}

double paying_revenue(const std::vector<char>& adopted,
                      const std::vector<NodeId>& seeds, std::size_t quantity,
                      double price) {
  std::vector<char> is_seed(adopted.size(), 0);
  for (NodeId s : seeds) is_seed[s] = 1;
  std::size_t paying = 0;
  for (std::size_t v = 0; v < adopted.size(); ++v) {
    if (adopted[v] && !is_seed[v]) ++paying;
  }
  std::size_t distinct = 0;
  for (char c : is_seed) distinct += c != 0;
  return price * static_cast<double>(std::min(paying, quantity - distinct));
}

std::size_t potential_count(const Dense& d, double price) {
  std::vector<char> all(d.n, 1);
  std::size_t m = 0;
  for (std::size_t v = 0; v < d.n; ++v) {
    if (d.chi[v] + d.f(d.in_sum(static_cast<NodeId>(v), all)) >= price) ++m;
  }
  return m;
}

// Price visiting order shared by the framework oracles.
std::vector<double> visit_order(const Dense& d, std::size_t quantity,
                                const std::vector<double>& prices,
                                std::vector<double>* bounds) {
  std::vector<std::pair<double, double>> pb;
  for (double p : prices) {
    pb.emplace_back(p, p * static_cast<double>(
                               std::min(quantity, potential_count(d, p))));
  }
  std::stable_sort(pb.begin(), pb.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  std::vector<double> out;
  bounds->clear();
  for (const auto& [p, b] : pb) {
    out.push_back(p);
    bounds->push_back(b);
  }
  return out;
}

}  // namespace

double Dense::in_sum(NodeId v, const std::vector<char>& from) const {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (from[i]) s += w[i][v];
  }
  return s;
}

Dense densify(const MonetizingNetwork& net) {
  Dense d;
  d.n = net.size();
  d.chi.assign(net.inherent_valuations().begin(),
               net.inherent_valuations().end());
  d.w.assign(d.n, std::vector<double>(d.n, 0.0));
  for (NodeId u = 0; u < d.n; ++u) {
    for (NodeId v = 0; v < d.n; ++v) d.w[u][v] = net.weight(u, v);
  }
  ConcaveInfluence f = net.influence();
  d.f = [f](double x) { return f(x); };
  return d;
}

std::vector<char> async_cascade(const Dense& d, double price,
                                const std::vector<NodeId>& seeds,
                                std::mt19937_64& rng) {
  std::vector<char> adopted(d.n, 0);
  for (NodeId s : seeds) adopted[s] = 1;
  std::vector<NodeId> order(d.n);
  std::iota(order.begin(), order.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::shuffle(order.begin(), order.end(), rng);
    for (NodeId v : order) {
      if (adopted[v]) continue;
      if (d.chi[v] + d.f(d.in_sum(v, adopted)) >= price) {
        adopted[v] = 1;
        changed = true;
      }
    }
  }
  return adopted;
}

double oracle_revenue(const Dense& d, std::size_t quantity, double price,
                      const std::vector<NodeId>& seeds, std::mt19937_64& rng) {
  return paying_revenue(async_cascade(d, price, seeds, rng), seeds, quantity,
                        price);
}

double oracle_price_best(const Dense& d, std::size_t quantity, double price) {
  std::mt19937_64 rng(0x5eed);
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << d.n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > quantity) continue;
    best = std::max(best, oracle_revenue(d, quantity, price,
                                         mask_to_nodes(mask, d.n), rng));
  }
  return best;
}

double oracle_optimum(const Dense& d, std::size_t quantity,
                      const std::vector<double>& prices) {
  double best = 0.0;
  for (double p : prices) best = std::max(best, oracle_price_best(d, quantity, p));
  return best;
}

OracleImportance oracle_importance(const Dense& d, double price,
                                   const std::vector<NodeId>& seeds) {
  std::mt19937_64 rng(7);
  OracleImportance o;
  o.adopted = async_cascade(d, price, seeds, rng);
  o.x.resize(d.n);
  std::vector<double> s(d.n);
  for (std::size_t v = 0; v < d.n; ++v) {
    s[v] = d.in_sum(static_cast<NodeId>(v), o.adopted);
    o.x[v] = d.chi[v] + d.f(s[v]);
  }
  o.w_hat.assign(d.n, std::vector<double>(d.n, 0.0));
  for (std::size_t u = 0; u < d.n; ++u) {
    for (std::size_t v = 0; v < d.n; ++v) {
      if (u == v || o.adopted[v] || price <= o.x[v]) continue;
      const double gain = d.f(d.w[u][v] + s[v]) - d.f(s[v]);
      o.w_hat[u][v] = std::min(1.0, gain / (price - o.x[v]));
    }
  }
  std::vector<char> all(d.n, 1);
  o.potential.resize(d.n);
  for (std::size_t v = 0; v < d.n; ++v) {
    o.potential[v] =
        d.chi[v] + d.f(d.in_sum(static_cast<NodeId>(v), all)) >= price;
  }
  return o;
}

std::vector<double> OracleImportance::feedback(NodeId u,
                                               std::size_t* steps) const {
  const std::size_t n = w_hat.size();
  std::vector<double> value = w_hat[u];
  value[u] = 0.0;
  std::vector<char> reached(n, 0);
  std::size_t k = 0;
  for (;;) {
    std::vector<NodeId> frontier;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != u && !reached[v] && value[v] >= kSaturation) {
        value[v] = 1.0;
        reached[v] = 1;
        frontier.push_back(static_cast<NodeId>(v));
      }
    }
    if (frontier.empty()) break;
    ++k;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || reached[v]) continue;
      double add = 0.0;
      for (NodeId i : frontier) add += w_hat[i][v];
      value[v] = std::min(1.0, value[v] + add);
    }
  }
  if (steps) *steps = k;
  return value;
}

double OracleImportance::psi(NodeId u) const {
  const auto value = feedback(u);
  double total = 0.0;
  for (std::size_t v = 0; v < value.size(); ++v) {
    if (potential[v]) total += value[v];
  }
  return total;
}

OracleGreedy oracle_prubif(const Dense& d, std::size_t quantity,
                           const std::vector<double>& prices) {
  OracleGreedy best;
  std::vector<double> bounds;
  const auto order = visit_order(d, quantity, prices, &bounds);
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const double p = order[idx];
    if (bounds[idx] <= best.revenue) break;
    std::vector<NodeId> seeds;
    for (;;) {
      const OracleImportance state = oracle_importance(d, p, seeds);
      const double r =
          paying_revenue(state.adopted, seeds, quantity, p);
      if (r > best.revenue) {
        best.revenue = r;
        best.price = p;
        best.seeds = seeds;
        std::sort(best.seeds.begin(), best.seeds.end());
      }
      const std::size_t k = seeds.size();
      if (!(k < quantity &&
            p * static_cast<double>(quantity - k) > best.revenue)) {
        break;
      }
      std::vector<std::pair<double, NodeId>> scored;
      for (std::size_t u = 0; u < d.n; ++u) {
        if (!state.adopted[u]) {
          scored.emplace_back(state.psi(static_cast<NodeId>(u)),
                              static_cast<NodeId>(u));
        }
      }
      if (scored.empty()) break;
      auto top = scored.front();
      for (const auto& c : scored) {
        if (c.first > top.first) top = c;
      }
      for (const auto& c : scored) {
        if (c.second == top.second) continue;
        const bool exact_zero = c.first == 0.0 && top.first == 0.0;
        if (!exact_zero && std::abs(c.first - top.first) <= 1e-9) {
          best.ambiguous = true;
        }
      }
      seeds.push_back(top.second);
    }
  }
  return best;
}

double oracle_nosocial(const Dense& d, std::size_t quantity,
                       const std::vector<double>& prices) {
  double best = 0.0;
  for (double p : prices) {
    std::size_t buyers = 0;
    for (double c : d.chi) buyers += c >= p;
    best = std::max(best, p * static_cast<double>(std::min(buyers, quantity)));
  }
  return best;
}

MonetizingNetwork random_network(std::mt19937_64& rng, std::size_t nodes,
                                 double edge_probability) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(1, 5);
  std::uniform_int_distribution<int> quarter(0, 32);
  std::vector<std::string> labels;
  std::vector<Money> chi;
  for (std::size_t v = 0; v < nodes; ++v) {
    labels.push_back("n" + std::to_string(v));
    chi.push_back(quarter(rng) / 4.0);
  }
  std::vector<IndexedEdge> edges;
  for (NodeId u = 0; u < nodes; ++u) {
    for (NodeId v = 0; v < nodes; ++v) {
      if (u != v && coin(rng) < edge_probability) {
        edges.push_back({u, v, static_cast<double>(weight(rng))});
      }
    }
  }
  const ConcaveInfluence f = coin(rng) < 0.5 ? ConcaveInfluence::identity()
                                             : ConcaveInfluence::sqrt();
  return build_network(std::move(labels), std::move(chi), edges, f);
}

std::vector<double> iota_prices(int lo, int hi) {
  std::vector<double> out;
  for (int p = lo; p <= hi; ++p) out.push_back(p);
  return out;
}

}  // namespace seedprice::testing
