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

#ifndef SEEDPRICE_CASCADE_H_
#define SEEDPRICE_CASCADE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "seedprice/model.h"

namespace seedprice {

// Adoption fixpoint sigma(A) at one price.
struct CascadeResult {
  std::vector<NodeId> adopters;     // ascending, includes the seeds
  std::vector<char> adopted;        // membership flag per node
  std::vector<double> influence_sum;  // sum of w_iv over adopters i
  std::vector<Money> final_valuation;  // chi_v + F(influence_sum[v])
  // Rounds after the initial one that added at least one adopter.
  std::size_t rounds = 0;

  bool contains(NodeId v) const { return adopted[v] != 0; }
};

// Reusable scratch buffers for many cascades over one network. One engine
// per thread; the network must outlive it.
//
// Semantics are synchronous rounds: round 0 adopts the seeds plus every node
// with chi_v >= price; each following round adopts every remaining node whose
// valuation against the current adopters reaches the price. Each edge is
// pushed once, from its source's adoption.
class CascadeEngine {
 public:
  explicit CascadeEngine(const MonetizingNetwork& net);

  // |sigma(A) \ A|, stopping as soon as the count reaches `cap`.
  std::size_t count_paying(
      Money price, std::span<const NodeId> seeds,
      std::size_t cap = std::numeric_limits<std::size_t>::max());

  CascadeResult run(Money price, std::span<const NodeId> seeds);

  const MonetizingNetwork& network() const { return *net_; }

 private:
  // Returns the number of non-seed adopters (capped).
  std::size_t propagate(Money price, std::span<const NodeId> seeds,
                        std::size_t cap, std::size_t* rounds);

  void next_epoch();

  const MonetizingNetwork* net_;
  std::vector<NodeId> by_valuation_;  // descending chi
  std::vector<std::uint32_t> adopted_epoch_;
  std::vector<std::uint32_t> sum_epoch_;
  std::vector<std::uint32_t> touched_epoch_;
  std::vector<double> sum_;
  std::vector<NodeId> frontier_;
  std::vector<NodeId> next_;
  std::vector<NodeId> touched_;
  std::vector<NodeId> adopted_list_;
  std::uint32_t epoch_ = 0;
};

// Throws kUnknownNode for seeds outside the network.
CascadeResult run_cascade(const MonetizingNetwork& net, Money price,
                          std::span<const NodeId> seeds);

// R(n, p, A) = p * min(|sigma(A) \ A|, n - |A|). Throws kSeedsExceedStock
// when |A| > n.
Money revenue(const MonetizingNetwork& net, std::size_t quantity, Money price,
              std::span<const NodeId> seeds);

// {v : X_max(v) >= price}, ascending.
std::vector<NodeId> potential_buyers(const MonetizingNetwork& net,
                                     Money price);

// p * min(n, m_p). Never below the revenue of any seed group at p.
Money revenue_upper_bound(const MonetizingNetwork& net, std::size_t quantity,
                          Money price);

// True iff a seed group of size k may still beat r_global at this price,
// i.e. k < n - r_global / p.
bool seed_size_admissible(std::size_t k, std::size_t quantity, Money price,
                          Money r_global);

// Largest admissible seed-group size, or nullopt when even 0 is not.
std::optional<std::size_t> seed_size_bound(std::size_t quantity, Money price,
                                           Money r_global);

struct PriceBound {
  Money price;
  std::size_t potential_buyers;  // m_p
  Money bound;                   // R_bound(n, p)
};

// m_p and R_bound(n, p) for every candidate price.
class BoundTable {
 public:
  BoundTable(const MonetizingNetwork& net, const PriceSet& prices,
             std::size_t quantity);

  // Ascending price.
  std::span<const PriceBound> entries() const { return entries_; }
  // Descending bound; ties visited in ascending price.
  const std::vector<PriceBound>& visit_order() const { return order_; }

 private:
  std::vector<PriceBound> entries_;
  std::vector<PriceBound> order_;
};

}  // namespace seedprice

#endif  // SEEDPRICE_CASCADE_H_
