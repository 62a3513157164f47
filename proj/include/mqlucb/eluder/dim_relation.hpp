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

#include <optional>
#include <span>
#include <string>

#include "mqlucb/func/function_class.hpp"

namespace mqlucb {

struct DimReport {
  double generalized_dim = 0.0;
  /// Absent when the class is not brute-forceable (linear classes).
  std::optional<int> eluder_dim;
  double rhs = 0.0;
  double ratio = 0.0;  // generalized_dim / rhs
  bool violation = false;
  // Parameters.
  double lambda = 1.0;
  double alpha = 0.0;  // min sigma
  double max_sigma = 0.0;  // M
  int length = 0;      // T
  double eps = 0.0;
  double constant = 10.0;
};

inline constexpr double kDimRelationConstant = 10.0;

/// rhs = dim_E * log T * log(lambda T) * log(M / alpha) + 1 / lambda with every
/// log clipped at 0.
double dim_relation_rhs(int eluder_dim, int length, double lambda, double max_sigma, double alpha);

/// Computes both sides for a finite class; eps defaults to 1 / sqrt(T). A
/// violation is flagged only if lhs > constant * rhs.
DimReport check_dim_relation(const FiniteClass& cls, std::span<const int> points,
                          std::span<const double> sigma, double lambda,
                          std::optional<double> eps = std::nullopt,
                          double constant = kDimRelationConstant);

}  // namespace mqlucb
