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
#include <vector>

#include <Eigen/Core>

#include "mqlucb/func/gram.hpp"

namespace mqlucb {

enum class Snapshot { kCurrent, kFrozen };

/// Sufficient statistics behind the D^2 uncertainty of one stage, plus a
/// frozen copy captured at the last policy switch.
///
/// Single writer; concurrent const queries between updates are fine.
class UncertaintyState {
 public:
  explicit UncertaintyState(double sigma_floor) : sigma_floor_(sigma_floor) {}
  virtual ~UncertaintyState() = default;

  virtual int domain_size() const = 0;
  virtual double d2(int z, Snapshot which) const = 0;
  virtual std::vector<double> d2_all(Snapshot which) const = 0;

  /// Adds observation z with weight 1/sigma_bar^2. Rejects sigma_bar below
  /// the floor with std::invalid_argument. The frozen copy is untouched.
  void update(int z, double sigma_bar);

  /// frozen := current.
  virtual void freeze() = 0;

  virtual std::unique_ptr<UncertaintyState> clone() const = 0;

  double sigma_floor() const { return sigma_floor_; }
  long observations() const { return observations_; }

 protected:
  void check_sigma(double sigma_bar) const;
  virtual void do_update(int z, double sigma_bar) = 0;

  long observations_ = 0;

 private:
  double sigma_floor_;
};

/// D^2(z) = phi(z)^T A^{-1} phi(z), A = lambda_eff I + sum phi phi^T / sigma^2.
class LinearUncertainty final : public UncertaintyState {
 public:
  /// features may be empty (zero rows) when only the vector API is used.
  LinearUncertainty(Eigen::MatrixXd features, int dim, double lambda_eff, double sigma_floor,
                    int refresh_period = GramFactor::kDefaultRefreshPeriod);

  int domain_size() const override { return static_cast<int>(features_.rows()); }
  double d2(int z, Snapshot which) const override;
  std::vector<double> d2_all(Snapshot which) const override;
  void freeze() override;
  std::unique_ptr<UncertaintyState> clone() const override;

  double d2(const Eigen::VectorXd& phi, Snapshot which) const;
  void update(const Eigen::VectorXd& phi, double sigma_bar);
  using UncertaintyState::update;

  const GramFactor& gram(Snapshot which) const {
    return which == Snapshot::kCurrent ? current_ : frozen_;
  }

 private:
  void do_update(int z, double sigma_bar) override;

  Eigen::MatrixXd features_;
  GramFactor current_;
  GramFactor frozen_;
};

/// Brute-force D^2 over all function pairs of a finite class. Observations
/// are kept in arrival order; the frozen view is a prefix of them.
class FiniteUncertainty final : public UncertaintyState {
 public:
  FiniteUncertainty(Eigen::MatrixXd values, double lambda, double sigma_floor);

  int domain_size() const override { return static_cast<int>(values_.cols()); }
  double d2(int z, Snapshot which) const override;
  std::vector<double> d2_all(Snapshot which) const override;
  void freeze() override;
  std::unique_ptr<UncertaintyState> clone() const override;

  std::size_t frozen_prefix() const { return frozen_prefix_; }
  const std::vector<std::pair<int, double>>& history() const { return history_; }

 private:
  void do_update(int z, double sigma_bar) override;
  const std::vector<double>& weights(Snapshot which) const {
    return which == Snapshot::kCurrent ? weights_ : frozen_weights_;
  }

  Eigen::MatrixXd values_;
  double lambda_;
  std::vector<std::pair<int, double>> history_;
  std::size_t frozen_prefix_ = 0;
  // Per-point sums of 1/sigma^2 over the full history and the frozen prefix.
  std::vector<double> weights_;
  std::vector<double> frozen_weights_;
};

}  // namespace mqlucb
