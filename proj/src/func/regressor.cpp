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

#include "mqlucb/func/function_class.hpp"

namespace mqlucb {

Regressor Regressor::zero(int domain_size) {
  Regressor r;
  r.values_.assign(static_cast<std::size_t>(domain_size), 0.0);
  return r;
}

Regressor Regressor::linear(Eigen::VectorXd theta, std::vector<double> values) {
  Regressor r;
  r.theta_ = std::move(theta);
  r.values_ = std::move(values);
  return r;
}

Regressor Regressor::finite(int index, std::vector<double> values) {
  Regressor r;
  r.index_ = index;
  r.values_ = std::move(values);
  return r;
}

}  // namespace mqlucb
