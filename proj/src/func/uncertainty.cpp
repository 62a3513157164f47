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

#include "mqlucb/func/uncertainty.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "mqlucb/kernels/pair_sup.hpp"

namespace mqlucb {

void UncertaintyState::check_sigma(double sigma_bar) const {
  if (!(sigma_bar >= sigma_floor_) || !(sigma_bar > 0.0)) {
    throw std::invalid_argument("sigma_bar " + std::to_string(sigma_bar) + " below floor " +
                                std::to_string(sigma_floor_));
  }
}

void UncertaintyState::update(int z, double sigma_bar) {
  check_sigma(sigma_bar);
  if (z < 0 || z >= domain_size()) throw std::out_of_range("point outside the domain");
  do_update(z, sigma_bar);
  ++observations_;
}

LinearUncertainty::LinearUncertainty(Eigen::MatrixXd features, int dim, double lambda_eff,
                                     double sigma_floor, int refresh_period)
    : UncertaintyState(sigma_floor),
      features_(std::move(features)),
      current_(dim, lambda_eff, refresh_period),
      frozen_(dim, lambda_eff, refresh_period) {
  if (features_.rows() > 0 && features_.cols() != dim) {
    throw std::invalid_argument("feature matrix width does not match dimension");
  }
}

double LinearUncertainty::d2(const Eigen::VectorXd& phi, Snapshot which) const {
  return gram(which).quad_inverse(phi);
}

double LinearUncertainty::d2(int z, Snapshot which) const {
  return d2(Eigen::VectorXd(features_.row(z).transpose()), which);
}

std::vector<double> LinearUncertainty::d2_all(Snapshot which) const {
  std::vector<double> out(static_cast<std::size_t>(features_.rows()));
  for (int z = 0; z < features_.rows(); ++z) out[static_cast<std::size_t>(z)] = d2(z, which);
  return out;
}

void LinearUncertainty::update(const Eigen::VectorXd& phi, double sigma_bar) {
  check_sigma(sigma_bar);
  current_.add(phi, 1.0 / (sigma_bar * sigma_bar));
  ++observations_;
}

void LinearUncertainty::do_update(int z, double sigma_bar) {
  current_.add(features_.row(z).transpose(), 1.0 / (sigma_bar * sigma_bar));
}

void LinearUncertainty::freeze() { frozen_ = current_; }

std::unique_ptr<UncertaintyState> LinearUncertainty::clone() const {
  return std::make_unique<LinearUncertainty>(*this);
}

FiniteUncertainty::FiniteUncertainty(Eigen::MatrixXd values, double lambda, double sigma_floor)
    : UncertaintyState(sigma_floor),
      values_(std::move(values)),
      lambda_(lambda),
      weights_(static_cast<std::size_t>(values_.cols()), 0.0),
      frozen_weights_(static_cast<std::size_t>(values_.cols()), 0.0) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
}

double FiniteUncertainty::d2(int z, Snapshot which) const {
  const int q[] = {z};
  return kernels::pair_sup_ratio(values_, weights(which), q, lambda_).front();
}

std::vector<double> FiniteUncertainty::d2_all(Snapshot which) const {
  std::vector<int> all(static_cast<std::size_t>(values_.cols()));
  std::iota(all.begin(), all.end(), 0);
  return kernels::pair_sup_ratio(values_, weights(which), all, lambda_);
}

void FiniteUncertainty::do_update(int z, double sigma_bar) {
  history_.emplace_back(z, sigma_bar);
  weights_[static_cast<std::size_t>(z)] += 1.0 / (sigma_bar * sigma_bar);
}

void FiniteUncertainty::freeze() {
  frozen_prefix_ = history_.size();
  frozen_weights_ = weights_;
}

std::unique_ptr<UncertaintyState> FiniteUncertainty::clone() const {
  return std::make_unique<FiniteUncertainty>(*this);
}

}  // namespace mqlucb
