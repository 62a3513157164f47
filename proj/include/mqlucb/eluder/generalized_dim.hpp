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

#include <Eigen/Core>

#include "mqlucb/func/function_class.hpp"

namespace mqlucb {

/// sum_i min(1, D^2(z_i; z_{<i}, sigma_{<i}) / sigma_i^2) for a class over a
/// finite domain. Throws std::invalid_argument on mismatched lengths or a
/// nonpositive sigma.
double generalized_dim(const FunctionClass& cls, std::span<const int> points,
                       std::span<const double> sigma, double lambda);

/// Same sum for a raw linear stream: rows of `stream` are the features,
/// D^2 = phi^T A^{-1} phi with A = lambda_eff I + sum phi phi^T / sigma^2.
double generalized_dim_linear(const Eigen::MatrixXd& stream, std::span<const double> sigma,
                              double lambda_eff);

/// 2 d log(1 + T / (d lambda_eff alpha^2)).
double elliptical_potential_bound(int dim, int length, double lambda_eff, double alpha);

}  // namespace mqlucb
