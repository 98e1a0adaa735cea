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

#include "seedprice/datagen.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "seedprice/error.h"
#include "seedprice/rng.h"

namespace seedprice {

double Rng::standard_normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

// Decorrelates sub-streams derived from one user seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidParams, message);
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

ValuationDistribution ValuationDistribution::normal(double mean,
                                                    double variance) {
  ValuationDistribution d;
  d.kind = DistributionKind::kNormal;
  d.mean1 = mean;
  d.variance1 = variance;
  d.validate();
  return d;
}

ValuationDistribution ValuationDistribution::m_shape(double mean1,
                                                     double variance1,
                                                     double mean2,
                                                     double variance2) {
  ValuationDistribution d;
  d.kind = DistributionKind::kMShape;
  d.mean1 = mean1;
  d.variance1 = variance1;
  d.mean2 = mean2;
  d.variance2 = variance2;
  d.validate();
  return d;
}

void ValuationDistribution::validate() const {
  if (!std::isfinite(mean1) || !positive_finite(variance1)) {
    invalid("normal parameters need a finite mean and positive variance");
  }
  if (kind == DistributionKind::kMShape) {
    if (!std::isfinite(mean2) || !positive_finite(variance2)) {
      invalid("M-shape parameters need finite means and positive variances");
    }
    if (!(mean1 < mean2)) invalid("M-shape requires mean1 < mean2");
  }
}

std::vector<Money> sample_valuations(const ValuationDistribution& dist,
                                     std::size_t node_count,
                                     std::uint64_t rng_seed) {
  dist.validate();
  if (node_count == 0) invalid("node_count must be at least 1");
  Rng rng(rng_seed);
  const double sd1 = std::sqrt(dist.variance1);
  const double sd2 = std::sqrt(dist.variance2);
  std::vector<Money> out(node_count);
  for (auto& x : out) {
    double draw;
    if (dist.kind == DistributionKind::kNormal) {
      draw = dist.mean1 + sd1 * rng.standard_normal();
    } else {
      const bool upper = rng.uniform01() >= 0.5;
      const double z = rng.standard_normal();
      draw = upper ? dist.mean2 + sd2 * z : dist.mean1 + sd1 * z;
    }
    x = std::max(0.0, draw);
  }
  return out;
}

namespace {

struct WeightSampler {
  Rng& rng;
  double operator()(const UniformIntWeights& w) const {
    const auto span = static_cast<std::uint64_t>(w.hi - w.lo + 1);
    return static_cast<double>(w.lo +
                               static_cast<long>(rng.uniform_below(span)));
  }
  double operator()(const PowerLawWeights& w) const {
    const double u = 1.0 - rng.uniform01();  // (0, 1]
    const double x = std::floor(std::pow(u, -1.0 / (w.exponent - 1.0)));
    return std::min(x, w.max_weight);
  }
};

void validate_spec(const InstanceSpec& spec) {
  if (spec.node_count == 0) invalid("node_count must be at least 1");
  if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
    invalid("edge_probability must lie in [0, 1]");
  }
  if (const auto* u = std::get_if<UniformIntWeights>(&spec.weights)) {
    if (u->lo < 0 || u->lo > u->hi) {
      invalid("uniform weights need 0 <= lo <= hi");
    }
  } else {
    const auto& p = std::get<PowerLawWeights>(spec.weights);
    if (!(p.exponent > 1.0) || !std::isfinite(p.exponent) ||
        !(p.max_weight >= 1.0)) {
      invalid("power-law weights need exponent > 1 and max_weight >= 1");
    }
  }
  if (spec.topology == Topology::kChungLu &&
      !(spec.degree_exponent > 1.0 && std::isfinite(spec.degree_exponent))) {
    invalid("degree_exponent must be > 1");
  }
  spec.valuations.validate();
}

}  // namespace

MonetizingNetwork generate_instance(const InstanceSpec& spec) {
  validate_spec(spec);
  const std::size_t n = spec.node_count;
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  std::vector<Money> valuations =
      sample_valuations(spec.valuations, n, derive_seed(spec.rng_seed, 0));

  Rng rng(derive_seed(spec.rng_seed, 1));
  WeightSampler sample_weight{rng};

  // Per-pair edge probability.
  std::vector<double> out_w, in_w;
  double scale = 0.0;
  if (spec.topology == Topology::kChungLu && n > 1) {
    out_w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      out_w[i] = std::pow(static_cast<double>(i + 1),
                          -1.0 / (spec.degree_exponent - 1.0));
    }
    // In-weights follow the same law under a random relabelling, so hubs in
    // one direction are not automatically hubs in the other.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.uniform_below(i + 1)]);
    }
    in_w.resize(n);
    for (std::size_t i = 0; i < n; ++i) in_w[i] = out_w[perm[i]];
    const double total = std::accumulate(out_w.begin(), out_w.end(), 0.0);
    const double mean_degree =
        spec.edge_probability * static_cast<double>(n - 1);
    scale = mean_degree * static_cast<double>(n) / (total * total);
  }

  std::vector<IndexedEdge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const double prob =
          spec.topology == Topology::kChungLu
              ? std::min(1.0, scale * out_w[u] * in_w[v])
              : spec.edge_probability;
      if (rng.uniform01() < prob) {
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v),
                         std::visit(sample_weight, spec.weights)});
      }
    }
  }
  return build_network(std::move(labels), std::move(valuations), edges,
                       spec.influence);
}

}  // namespace seedprice
