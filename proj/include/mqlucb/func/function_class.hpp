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

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "mqlucb/kernels/pair_sup.hpp"

namespace mqlucb {

class UncertaintyState;

/// Fitted function over a finite domain, tabulated at fit time.
class Regressor {
 public:
  /// The zero function on a domain of the given size.
  static Regressor zero(int domain_size);
  static Regressor linear(Eigen::VectorXd theta, std::vector<double> values);
  static Regressor finite(int index, std::vector<double> values);

  double operator()(int z) const { return values_[static_cast<std::size_t>(z)]; }
  int domain_size() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }

  /// Linear parameter (empty for finite-class regressors).
  const Eigen::VectorXd& theta() const { return theta_; }
  /// Position in the finite class, -1 otherwise.
  int function_index() const { return index_; }

 private:
  std::vector<double> values_;
  Eigen::VectorXd theta_;
  int index_ = -1;
};

struct FitResult {
  Regressor regressor;
  /// ||A theta - b||_inf / (1 + ||b||_inf) for linear fits, 0 otherwise.
  double residual_ratio = 0.0;
};

class IllConditionedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Function class over a finite domain of points z in [0, domain_size).
/// Points are state-action indices s * |A| + a when used with an MDP.
class FunctionClass {
 public:
  virtual ~FunctionClass() = default;

  virtual int domain_size() const = 0;

  /// Complexity proxy used by the practical confidence schedules: the
  /// feature dimension for linear classes, log|F| for finite ones.
  virtual double complexity() const = 0;

  /// Weighted least squares over the class. For linear classes lambda is
  /// the raw regularizer; the class applies its own effective scaling.
  virtual FitResult fit(std::span<const WeightedTarget> problem, double lambda) const = 0;

  virtual std::unique_ptr<UncertaintyState> make_uncertainty(double lambda, double sigma_floor,
                                                             int refresh_period) const = 0;
};

/// Feature map phi: domain -> R^d with ||phi(z)|| <= 1, one row per point.
class FeatureMap {
 public:
  explicit FeatureMap(Eigen::MatrixXd rows);

  int dimension() const { return static_cast<int>(rows_.cols()); }
  int domain_size() const { return static_cast<int>(rows_.rows()); }
  Eigen::VectorXd feature(int z) const { return rows_.row(z).transpose(); }
  const Eigen::MatrixXd& matrix() const { return rows_; }

 private:
  Eigen::MatrixXd rows_;
};

/// Linear class {z -> phi(z)^T theta : ||theta|| <= radius}.
///
/// Differences of two members span the ball of radius 2 * radius, so the
/// supremum defining D^2 equals the elliptical norm with ridge
/// lambda / (2 * radius)^2. The default radius 1/2 makes that ridge equal lambda.
class LinearClass final : public FunctionClass {
 public:
  explicit LinearClass(FeatureMap features, double radius = 0.5);

  const FeatureMap& features() const { return features_; }
  double radius() const { return radius_; }
  double effective_lambda(double lambda) const;

  int domain_size() const override { return features_.domain_size(); }
  double complexity() const override { return features_.dimension(); }
  FitResult fit(std::span<const WeightedTarget> problem, double lambda) const override;
  std::unique_ptr<UncertaintyState> make_uncertainty(double lambda, double sigma_floor,
                                                     int refresh_period) const override;

 private:
  FeatureMap features_;
  double radius_;
};

/// Explicit finite class: values(i, z) = f_i(z) in [0, L].
class FiniteClass final : public FunctionClass {
 public:
  static constexpr int kDefaultMaxSize = 512;

  FiniteClass(Eigen::MatrixXd values, double range_bound, int max_size = kDefaultMaxSize);

  int size() const { return static_cast<int>(values_.rows()); }
  double range_bound() const { return range_; }
  const Eigen::MatrixXd& values() const { return values_; }
  double value(int f, int z) const { return values_(f, z); }

  int domain_size() const override { return static_cast<int>(values_.cols()); }
  double complexity() const override;
  /// Exact argmin of the weighted loss; lambda is unused.
  FitResult fit(std::span<const WeightedTarget> problem, double lambda) const override;
  std::unique_ptr<UncertaintyState> make_uncertainty(double lambda, double sigma_floor,
                                                     int refresh_period) const override;

 private:
  Eigen::MatrixXd values_;
  double range_;
};

}  // namespace mqlucb
