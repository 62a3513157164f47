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

#include "mqlucb/func/feature_map.hpp"

#include <stdexcept>

#include <Eigen/Cholesky>

#include "mqlucb/func/uncertainty.hpp"

namespace mqlucb {

FeatureMap::FeatureMap(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
  if (rows_.rows() < 1 || rows_.cols() < 1) throw std::invalid_argument("empty feature map");
  for (Eigen::Index z = 0; z < rows_.rows(); ++z) {
    if (rows_.row(z).norm() > 1.0 + 1e-12) {
      throw std::invalid_argument("feature of point " + std::to_string(z) + " has norm above 1");
    }
  }
}

FeatureMap make_tabular_linear(const MdpSpec& mdp) {
  return FeatureMap(Eigen::MatrixXd::Identity(mdp.num_pairs(), mdp.num_pairs()));
}

LinearClass::LinearClass(FeatureMap features, double radius)
    : features_(std::move(features)), radius_(radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("parameter radius must be positive");
}

double LinearClass::effective_lambda(double lambda) const {
  const double span = 2.0 * radius_;
  return lambda / (span * span);
}

FitResult LinearClass::fit(std::span<const WeightedTarget> problem, double lambda) const {
  const int d = features_.dimension();
  const double ridge = effective_lambda(lambda);
  // Collapse rows sharing a point before forming the normal equations.
  std::vector<double> weight(static_cast<std::size_t>(domain_size()), 0.0);
  std::vector<double> weighted_target(weight.size(), 0.0);
  for (const auto& row : problem) {
    if (row.point < 0 || row.point >= domain_size()) throw std::out_of_range("point outside the domain");
    weight[static_cast<std::size_t>(row.point)] += row.weight;
    weighted_target[static_cast<std::size_t>(row.point)] += row.weight * row.target;
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(d, d) * ridge;
  Eigen::VectorXd b = Eigen::VectorXd::Zero(d);
  for (int z = 0; z < domain_size(); ++z) {
    const double w = weight[static_cast<std::size_t>(z)];
    if (w == 0.0) continue;
    const auto phi = features_.matrix().row(z).transpose();
    a.noalias() += w * phi * phi.transpose();
    b.noalias() += weighted_target[static_cast<std::size_t>(z)] * phi;
  }
  Eigen::LLT<Eigen::MatrixXd> llt(a);
  if (llt.info() != Eigen::Success) throw IllConditionedError("normal equations are not positive definite");
  const auto diag = llt.matrixLLT().diagonal();
  const double ratio = diag.maxCoeff() / diag.minCoeff();
  if (ratio * ratio > GramFactor::kConditionAlarm) {
    throw IllConditionedError("normal equations condition estimate exceeds 1e12");
  }
  Eigen::VectorXd theta = llt.solve(b);
  const double residual = (a * theta - b).lpNorm<Eigen::Infinity>();
  const double scale = 1.0 + (b.size() ? b.lpNorm<Eigen::Infinity>() : 0.0);

  Eigen::VectorXd values = features_.matrix() * theta;
  return {Regressor::linear(std::move(theta), std::vector<double>(values.data(), values.data() + values.size())),
          residual / scale};
}

std::unique_ptr<UncertaintyState> LinearClass::make_uncertainty(double lambda, double sigma_floor,
                                                                int refresh_period) const {
  return std::make_unique<LinearUncertainty>(features_.matrix(), features_.dimension(),
                                             effective_lambda(lambda), sigma_floor, refresh_period);
}

}  // namespace mqlucb
