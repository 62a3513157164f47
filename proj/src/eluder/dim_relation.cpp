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

#include "mqlucb/eluder/dim_relation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mqlucb/eluder/eluder_dim.hpp"
#include "mqlucb/eluder/generalized_dim.hpp"

namespace mqlucb {

namespace {

double clipped_log(double x) { return x > 1.0 ? std::log(x) : 0.0; }

}  // namespace

double dim_relation_rhs(int eluder_dim, int length, double lambda, double max_sigma, double alpha) {
  return eluder_dim * clipped_log(length) * clipped_log(lambda * length) *
             clipped_log(max_sigma / alpha) +
         1.0 / lambda;
}

DimReport check_dim_relation(const FiniteClass& cls, std::span<const int> points,
                          std::span<const double> sigma, double lambda, std::optional<double> eps,
                          double constant) {
  if (points.empty()) throw std::invalid_argument("empty point sequence");
  DimReport r;
  r.lambda = lambda;
  r.length = static_cast<int>(points.size());
  r.eps = eps.value_or(1.0 / std::sqrt(static_cast<double>(r.length)));
  r.constant = constant;
  r.generalized_dim = generalized_dim(cls, points, sigma, lambda);
  r.alpha = *std::min_element(sigma.begin(), sigma.end());
  r.max_sigma = *std::max_element(sigma.begin(), sigma.end());
  r.eluder_dim = eluder_dim_bruteforce(cls.values(), r.eps);
  r.rhs = dim_relation_rhs(*r.eluder_dim, r.length, lambda, r.max_sigma, r.alpha);
  r.ratio = r.generalized_dim / r.rhs;
  r.violation = r.generalized_dim > constant * r.rhs;
  return r;
}

}  // namespace mqlucb
