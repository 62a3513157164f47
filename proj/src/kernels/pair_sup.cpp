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

#include "mqlucb/kernels/pair_sup.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <omp.h>

namespace mqlucb::kernels {

namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Work below this many pairs is not worth a parallel region.
constexpr long kParallelPairs = 4096;

void check_shapes(const ValueMatrix& values, std::span<const double> weights,
                  std::span<const int> queries) {
  if (weights.size() != static_cast<std::size_t>(values.cols())) {
    throw std::invalid_argument("weight vector must cover the whole domain");
  }
  for (int q : queries) {
    if (q < 0 || q >= values.cols()) throw std::out_of_range("query point outside the domain");
  }
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

std::vector<double> pair_sup_ratio(const ValueMatrix& values, std::span<const double> weights,
                                   std::span<const int> queries, double lambda) {
  check_shapes(values, weights, queries);
  const long nf = values.rows();
  std::vector<double> best(queries.size(), 0.0);
  if (nf < 2 || queries.empty()) return best;

  // Pack the weighted support and the query columns contiguously per function.
  std::vector<int> support;
  std::vector<double> w;
  for (std::size_t z = 0; z < weights.size(); ++z) {
    if (weights[z] > 0.0) {
      support.push_back(static_cast<int>(z));
      w.push_back(weights[z]);
    }
  }
  const long ns = static_cast<long>(support.size());
  const long nq = static_cast<long>(queries.size());
  RowMajor at_support(nf, ns), at_query(nf, nq);
  for (long i = 0; i < nf; ++i) {
    for (long t = 0; t < ns; ++t) at_support(i, t) = values(i, support[static_cast<std::size_t>(t)]);
    for (long t = 0; t < nq; ++t) at_query(i, t) = values(i, queries[static_cast<std::size_t>(t)]);
  }

  const bool parallel = nf * (nf - 1) / 2 >= kParallelPairs;
#pragma omp parallel if (parallel)
  {
    std::vector<double> local(static_cast<std::size_t>(nq), 0.0);
#pragma omp for schedule(dynamic, 4) nowait
    for (long i = 0; i < nf - 1; ++i) {
      const double* vi = at_support.row(i).data();
      const double* qi = at_query.row(i).data();
      for (long j = i + 1; j < nf; ++j) {
        const double* vj = at_support.row(j).data();
        const double* qj = at_query.row(j).data();
        double denom = lambda;
        for (long t = 0; t < ns; ++t) {
          const double diff = vi[t] - vj[t];
          denom += w[static_cast<std::size_t>(t)] * diff * diff;
        }
        const double inv = 1.0 / denom;
        for (long t = 0; t < nq; ++t) {
          const double diff = qi[t] - qj[t];
          local[static_cast<std::size_t>(t)] = std::max(local[static_cast<std::size_t>(t)], diff * diff * inv);
        }
      }
    }
#pragma omp critical
    for (std::size_t t = 0; t < best.size(); ++t) best[t] = std::max(best[t], local[t]);
  }
  return best;
}

int argmin_weighted_loss(const ValueMatrix& values, std::span<const WeightedTarget> problem) {
  const long nf = values.rows();
  if (nf < 1) throw std::invalid_argument("empty function class");
  for (const auto& row : problem) {
    if (row.point < 0 || row.point >= values.cols()) throw std::out_of_range("point outside the domain");
  }
  double best_loss = std::numeric_limits<double>::infinity();
  long best_index = 0;
  const bool parallel = nf * static_cast<long>(problem.size()) >= 32768;
#pragma omp parallel if (parallel)
  {
    double local_loss = std::numeric_limits<double>::infinity();
    long local_index = nf;
#pragma omp for schedule(static) nowait
    for (long i = 0; i < nf; ++i) {
      double loss = 0.0;
      for (const auto& row : problem) {
        const double r = values(i, row.point) - row.target;
        loss += row.weight * r * r;
      }
      if (loss < local_loss || (loss == local_loss && i < local_index)) {
        local_loss = loss;
        local_index = i;
      }
    }
#pragma omp critical
    if (local_loss < best_loss || (local_loss == best_loss && local_index < best_index)) {
      best_loss = local_loss;
      best_index = local_index;
    }
  }
  return static_cast<int>(best_index);
}

}  // namespace mqlucb::kernels
