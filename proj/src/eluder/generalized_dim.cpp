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

#include "mqlucb/eluder/generalized_dim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mqlucb/func/gram.hpp"
#include "mqlucb/func/uncertainty.hpp"

namespace mqlucb {

namespace {

void check_sigma(std::span<const double> sigma) {
  for (double s : sigma) {
    if (!(s > 0.0)) throw std::invalid_argument("sigma must be positive");
  }
}

}  // namespace

double generalized_dim(const FunctionClass& cls, std::span<const int> points,
                       std::span<const double> sigma, double lambda) {
  if (points.size() != sigma.size()) throw std::invalid_argument("points and sigma differ in length");
  check_sigma(sigma);
  auto unc = cls.make_uncertainty(lambda, 0.0, GramFactor::kDefaultRefreshPeriod);
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double s2 = sigma[i] * sigma[i];
    total += std::min(1.0, unc->d2(points[i], Snapshot::kCurrent) / s2);
    unc->update(points[i], sigma[i]);
  }
  return total;
}

double generalized_dim_linear(const Eigen::MatrixXd& stream, std::span<const double> sigma,
                              double lambda_eff) {
  if (static_cast<std::size_t>(stream.rows()) != sigma.size()) {
    throw std::invalid_argument("stream and sigma differ in length");
  }
  check_sigma(sigma);
  GramFactor gram(static_cast<int>(stream.cols()), lambda_eff);
  double total = 0.0;
  for (Eigen::Index i = 0; i < stream.rows(); ++i) {
    const Eigen::VectorXd phi = stream.row(i).transpose();
    const double s2 = sigma[static_cast<std::size_t>(i)] * sigma[static_cast<std::size_t>(i)];
    total += std::min(1.0, gram.quad_inverse(phi) / s2);
    gram.add(phi, 1.0 / s2);
  }
  return total;
}

double elliptical_potential_bound(int dim, int length, double lambda_eff, double alpha) {
  return 2.0 * dim * std::log1p(length / (dim * lambda_eff * alpha * alpha));
}

}  // namespace mqlucb
