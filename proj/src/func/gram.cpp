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

#include "mqlucb/func/gram.hpp"

#include <cmath>
#include <stdexcept>

namespace mqlucb {

GramFactor::GramFactor(int dim, double ridge, int refresh_period)
    : a_(Eigen::MatrixXd::Identity(dim, dim) * ridge), ridge_(ridge), refresh_period_(refresh_period) {
  if (dim < 1) throw std::invalid_argument("Gram dimension must be positive");
  if (!(ridge > 0.0)) throw std::invalid_argument("Gram ridge must be positive");
  llt_.compute(a_);
}

void GramFactor::add(const Eigen::VectorXd& x, double weight) {
  if (x.size() != a_.rows()) throw std::invalid_argument("feature dimension mismatch");
  if (!(weight > 0.0)) throw std::invalid_argument("Gram update weight must be positive");
  a_.noalias() += weight * x * x.transpose();
  ++updates_;
  if (refresh_period_ > 0 && ++since_refactor_ >= refresh_period_) {
    refactor();
    return;
  }
  llt_.rankUpdate(x * std::sqrt(weight), 1.0);
  if (llt_.info() != Eigen::Success || condition_estimate() > kConditionAlarm) refactor();
}

void GramFactor::refactor() {
  llt_.compute(a_);
  since_refactor_ = 0;
  if (llt_.info() != Eigen::Success) throw std::runtime_error("Gram matrix lost positive definiteness");
}

double GramFactor::quad_inverse(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd y = llt_.matrixL().solve(x);
  return y.squaredNorm();
}

Eigen::VectorXd GramFactor::solve(const Eigen::VectorXd& x) const { return llt_.solve(x); }

Eigen::MatrixXd GramFactor::inverse() const {
  return llt_.solve(Eigen::MatrixXd::Identity(a_.rows(), a_.cols()));
}

double GramFactor::log_det() const {
  const auto diag = llt_.matrixLLT().diagonal();
  return 2.0 * diag.array().log().sum();
}

double GramFactor::condition_estimate() const {
  const auto diag = llt_.matrixLLT().diagonal();
  const double ratio = diag.maxCoeff() / diag.minCoeff();
  return ratio * ratio;
}

}  // namespace mqlucb
