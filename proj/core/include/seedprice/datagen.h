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

#ifndef SEEDPRICE_DATAGEN_H_
#define SEEDPRICE_DATAGEN_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "seedprice/model.h"

namespace seedprice {

enum class DistributionKind { kNormal, kMShape };

// Normal(mean, variance), or the M-shape: an equal-probability mixture of
// two Normals with mean1 < mean2. Parameters are variances, not deviations.
struct ValuationDistribution {
  DistributionKind kind = DistributionKind::kNormal;
  double mean1 = 5.0;
  double variance1 = 2.04;
  double mean2 = 0.0;
  double variance2 = 0.0;

  static ValuationDistribution normal(double mean, double variance);
  static ValuationDistribution m_shape(double mean1, double variance1,
                                       double mean2, double variance2);

  // Throws kInvalidParams.
  void validate() const;
};

// Independent draws, negative values clamped to 0. Each node consumes the
// same number of random draws, so node i's value depends only on (seed, i).
// Throws kInvalidParams for node_count == 0 or a bad distribution.
std::vector<Money> sample_valuations(const ValuationDistribution& dist,
                                     std::size_t node_count,
                                     std::uint64_t rng_seed);

struct UniformIntWeights {
  long lo = 1;
  long hi = 5;
};

// Discrete Pareto: floor(U^(-1/(exponent-1))), capped at max_weight.
struct PowerLawWeights {
  double exponent = 2.5;
  double max_weight = 1000.0;
};

using WeightLaw = std::variant<UniformIntWeights, PowerLawWeights>;

enum class Topology {
  kErdosRenyi,  // each ordered pair independently with edge_probability
  kChungLu,     // power-law expected degrees, same mean degree as above
};

struct InstanceSpec {
  std::size_t node_count = 8;
  double edge_probability = 0.3;
  WeightLaw weights = UniformIntWeights{};
  ValuationDistribution valuations;
  std::uint64_t rng_seed = 0;
  Topology topology = Topology::kErdosRenyi;
  double degree_exponent = 2.5;  // kChungLu only
  ConcaveInfluence influence;
};

// Random simple digraph with labels "0".."n-1". Deterministic in the spec.
// Throws kInvalidParams.
MonetizingNetwork generate_instance(const InstanceSpec& spec);

}  // namespace seedprice

#endif  // SEEDPRICE_DATAGEN_H_
