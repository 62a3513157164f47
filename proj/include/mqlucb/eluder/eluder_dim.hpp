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

#include <Eigen/Core>

namespace mqlucb {

inline constexpr int kEluderMaxPoints = 12;
inline constexpr int kEluderMaxFunctions = 64;

/// Standard eluder dimension of a finite class, values(f, z), by exhaustive
/// search over sequences (points may repeat).
///
/// z is e'-independent of a prefix if some pair (f1, f2) has
/// sqrt(sum_prefix (f1 - f2)^2) <= e' and |f1(z) - f2(z)| > e'. A single
/// e' >= eps serves the whole sequence. Throws std::invalid_argument beyond
/// 12 points or 64 functions.
int eluder_dim_bruteforce(const Eigen::MatrixXd& values, double eps);

}  // namespace mqlucb
