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

#include <Eigen/Cholesky>
#include <Eigen/Core>

namespace mqlucb {

/// Regularized Gram matrix A = ridge * I + sum_i w_i x_i x_i^T with a Cholesky
/// factor maintained by rank-1 updates.
///
/// The factor is recomputed from the accumulated A every refresh_period
/// updates, and also whenever the diagonal-ratio condition estimate of the
/// factor exceeds kConditionAlarm.
class GramFactor {
 public:
  static constexpr int kDefaultRefreshPeriod = 256;
  static constexpr double kConditionAlarm = 1e12;

  GramFactor(int dim, double ridge, int refresh_period = kDefaultRefreshPeriod);

  int dimension() const { return static_cast<int>(a_.rows()); }
  double ridge() const { return ridge_; }

  /// A += weight * x x^T. Requires weight > 0.
  void add(const Eigen::VectorXd& x, double weight);

  /// x^T A^{-1} x through the maintained factor.
  double quad_inverse(const Eigen::VectorXd& x) const;

  /// A^{-1} x through the maintained factor.
  Eigen::VectorXd solve(const Eigen::VectorXd& x) const;

  /// A^{-1} built from the maintained factor.
  Eigen::MatrixXd inverse() const;

  double log_det() const;

  /// (max L_ii / min L_ii)^2, a cheap lower bound on cond(A).
  double condition_estimate() const;

  const Eigen::MatrixXd& matrix() const { return a_; }
  long updates() const { return updates_; }

  /// Re-factor from the accumulated matrix.
  void refactor();

 private:
  Eigen::MatrixXd a_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  double ridge_;
  int refresh_period_;
  int since_refactor_ = 0;
  long updates_ = 0;
};

}  // namespace mqlucb
