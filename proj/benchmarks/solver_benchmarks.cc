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

#include <benchmark/benchmark.h>

#include <vector>

#include "seedprice/cascade.h"
#include "seedprice/datagen.h"
#include "seedprice/prub.h"
#include "seedprice/prubif.h"

namespace seedprice {
namespace {

MonetizingNetwork chung_lu(std::size_t nodes, std::uint64_t seed) {
  InstanceSpec spec;
  spec.node_count = nodes;
  spec.edge_probability = 4.0 / static_cast<double>(nodes);
  spec.topology = Topology::kChungLu;
  spec.weights = PowerLawWeights{2.5, 20};
  spec.rng_seed = seed;
  return generate_instance(spec);
}

void BM_Cascade(benchmark::State& state) {
  const auto net = chung_lu(static_cast<std::size_t>(state.range(0)), 1);
  CascadeEngine engine(net);
  const std::vector<NodeId> seeds = {0, 1, 2, 3, 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.count_paying(5.0, seeds));
  }
}
BENCHMARK(BM_Cascade)->Arg(200)->Arg(1000)->Arg(10000);

void BM_PrubSmall(benchmark::State& state) {
  InstanceSpec spec;
  spec.node_count = static_cast<std::size_t>(state.range(0));
  spec.edge_probability = 0.3;
  spec.valuations = ValuationDistribution::normal(2, 2.04);
  spec.rng_seed = 2;
  const auto net = generate_instance(spec);
  const PriceSet prices = PriceSet::integer_range(1, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_prub(net, prices, 4).revenue);
  }
}
BENCHMARK(BM_PrubSmall)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PrubIf(benchmark::State& state) {
  const auto nodes = static_cast<std::size_t>(state.range(0));
  const auto net = chung_lu(nodes, 3);
  const PriceSet prices = PriceSet::integer_range(1, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_prubif(net, prices, nodes / 10).revenue);
  }
}
BENCHMARK(BM_PrubIf)->Arg(200)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace seedprice

BENCHMARK_MAIN();
