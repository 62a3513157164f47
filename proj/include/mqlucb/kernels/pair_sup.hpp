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

#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

namespace mqlucb {

/// One row of a weighted least-squares problem over a finite domain.
struct WeightedTarget {
  int point;
  double weight;
  double target;
};

namespace kernels {

/// Function values stored one function per row, one domain point per column.
using ValueMatrix = Eigen::MatrixXd;

/// For every query point q returns
///   max_{i<j} (v_i(q) - v_j(q))^2 / (sum_z w_z (v_i(z) - v_j(z))^2 + lambda),
/// i.e. the finite-class D^2 uncertainty, where w_z accumulates 1/sigma^2 of
/// all past observations at z. Zero when the class has fewer than two rows.
/// OpenMP-parallel over the first function of each pair.
std::vector<double> pair_sup_ratio(const ValueMatrix& values, std::span<const double> weights,
                                   std::span<const int> queries, double lambda);

/// Index of the row minimizing sum_t w_t (v(z_t) - y_t)^2, lowest index on
/// ties. OpenMP-parallel over rows.
int argmin_weighted_loss(const ValueMatrix& values, std::span<const WeightedTarget> problem);

/// Straightforward serial versions kept as the correctness reference for the
/// parallel kernels above (and as the baseline in the benchmark target).
namespace reference {

std::vector<double> pair_sup_ratio(const ValueMatrix& values, std::span<const double> weights,
                                   std::span<const int> queries, double lambda);

int argmin_weighted_loss(const ValueMatrix& values, std::span<const WeightedTarget> problem);

}  // namespace reference

/// Threads the OpenMP runtime will use for the parallel kernels.
int max_threads();

}  // namespace kernels
}  // namespace mqlucb
