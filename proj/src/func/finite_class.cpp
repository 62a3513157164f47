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
#include <cmath>
#include <stdexcept>
#include <string>

#include "mqlucb/func/function_class.hpp"
#include "mqlucb/func/uncertainty.hpp"

namespace mqlucb {

FiniteClass::FiniteClass(Eigen::MatrixXd values, double range_bound, int max_size)
    : values_(std::move(values)), range_(range_bound) {
  if (values_.rows() < 1 || values_.cols() < 1) throw std::invalid_argument("empty finite class");
  if (values_.rows() > max_size) {
    throw std::invalid_argument("finite class has " + std::to_string(values_.rows()) +
                                " functions, above the cap of " + std::to_string(max_size));
  }
  if (!(range_bound > 0.0)) throw std::invalid_argument("range bound must be positive");
  constexpr double kSlack = 1e-12;
  if (values_.minCoeff() < -kSlack || values_.maxCoeff() > range_bound + kSlack) {
    throw std::invalid_argument("finite class values must lie in [0, L]");
  }
}

double FiniteClass::complexity() const { return std::max(1.0, std::log(static_cast<double>(size()))); }

FitResult FiniteClass::fit(std::span<const WeightedTarget> problem, double) const {
  const int best = kernels::argmin_weighted_loss(values_, problem);
  const Eigen::VectorXd row = values_.row(best).transpose();
  return {Regressor::finite(best, std::vector<double>(row.data(), row.data() + row.size())), 0.0};
}

std::unique_ptr<UncertaintyState> FiniteClass::make_uncertainty(double lambda, double sigma_floor,
                                                                int) const {
  return std::make_unique<FiniteUncertainty>(values_, lambda, sigma_floor);
}

}  // namespace mqlucb
