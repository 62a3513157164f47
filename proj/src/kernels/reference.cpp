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

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mqlucb/kernels/pair_sup.hpp"

namespace mqlucb::kernels::reference {

std::vector<double> pair_sup_ratio(const ValueMatrix& values, std::span<const double> weights,
                                   std::span<const int> queries, double lambda) {
  if (weights.size() != static_cast<std::size_t>(values.cols())) {
    throw std::invalid_argument("weight vector must cover the whole domain");
  }
  std::vector<double> out;
  out.reserve(queries.size());
  for (int q : queries) {
    if (q < 0 || q >= values.cols()) throw std::out_of_range("query point outside the domain");
    double best = 0.0;
    for (long i = 0; i < values.rows(); ++i) {
      for (long j = i + 1; j < values.rows(); ++j) {
        double denom = lambda;
        for (long z = 0; z < values.cols(); ++z) {
          const double diff = values(i, z) - values(j, z);
          denom += weights[static_cast<std::size_t>(z)] * diff * diff;
        }
        const double num = values(i, q) - values(j, q);
        best = std::max(best, num * num / denom);
      }
    }
    out.push_back(best);
  }
  return out;
}

int argmin_weighted_loss(const ValueMatrix& values, std::span<const WeightedTarget> problem) {
  if (values.rows() < 1) throw std::invalid_argument("empty function class");
  int best = 0;
  double best_loss = std::numeric_limits<double>::infinity();
  for (long i = 0; i < values.rows(); ++i) {
    double loss = 0.0;
    for (const auto& row : problem) {
      const double r = values(i, row.point) - row.target;
      loss += row.weight * r * r;
    }
    if (loss < best_loss) {
      best_loss = loss;
      best = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace mqlucb::kernels::reference
