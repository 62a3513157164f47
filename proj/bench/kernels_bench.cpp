// Copyright 2026 The mqlucb Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels on a finite class.
// Args: {number of functions, number of domain points}.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "mqlucb/kernels/pair_sup.hpp"

namespace {

using mqlucb::WeightedTarget;
using mqlucb::kernels::ValueMatrix;

struct Fixture {
  ValueMatrix values;
  std::vector<double> weights;
  std::vector<int> queries;
  std::vector<WeightedTarget> problem;

  Fixture(int nf, int nz) : values(nf, nz), weights(static_cast<std::size_t>(nz)) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < values.size(); ++i) values.data()[i] = u(rng);
    for (auto& w : weights) w = 10.0 * u(rng);
    for (int z = 0; z < nz; ++z) queries.push_back(z);
    for (int t = 0; t < 4 * nz; ++t)
      problem.push_back({static_cast<int>(rng() % static_cast<unsigned>(nz)), 1.0 + u(rng), u(rng)});
  }
};

template <bool Parallel>
void BM_PairSup(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    auto r = Parallel ? mqlucb::kernels::pair_sup_ratio(f.values, f.weights, f.queries, 1.0)
                      : mqlucb::kernels::reference::pair_sup_ratio(f.values, f.weights, f.queries, 1.0);
    benchmark::DoNotOptimize(r.data());
  }
  state.counters["threads"] = Parallel ? mqlucb::kernels::max_threads() : 1;
}

template <bool Parallel>
void BM_Argmin(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    int i = Parallel ? mqlucb::kernels::argmin_weighted_loss(f.values, f.problem)
                     : mqlucb::kernels::reference::argmin_weighted_loss(f.values, f.problem);
    benchmark::DoNotOptimize(i);
  }
  state.counters["threads"] = Parallel ? mqlucb::kernels::max_threads() : 1;
}

}  // namespace

BENCHMARK(BM_PairSup<false>)->Args({64, 36})->Args({256, 36});
BENCHMARK(BM_PairSup<true>)->Args({64, 36})->Args({256, 36});
BENCHMARK(BM_Argmin<false>)->Args({256, 36})->Args({512, 144});
BENCHMARK(BM_Argmin<true>)->Args({256, 36})->Args({512, 144});

BENCHMARK_MAIN();
