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

#include "mqlucb/bench/class_spec.hpp"

#include <algorithm>
#include <fstream>

#include "mqlucb/bench/experiment_spec.hpp"
#include "mqlucb/eluder/generalized_dim.hpp"

namespace mqlucb {

namespace {

using nlohmann::json;

Eigen::MatrixXd read_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw SpecError(path, "expected a nonempty array of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw SpecError(path + "[0]", "expected a nonempty array");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) throw SpecError(rp, "ragged row");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number()) throw SpecError(rp + "[" + std::to_string(c) + "]", "expected a number");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = j[r][c].get<double>();
    }
  }
  return m;
}

}  // namespace

DimReport evaluate_class_spec(const json& j) {
  if (!j.is_object()) throw SpecError("$", "expected an object");
  for (const auto& [key, _] : j.items()) {
    static const char* known[] = {"schema", "kind", "values", "range_bound", "features",
                                  "points", "sigma", "lambda", "eps"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw SpecError("$." + key, "unknown field");
    }
  }
  if (j.value("schema", std::string{}) != kClassSpecSchema) {
    throw SpecError("$.schema", "expected \"classspec/v1\"");
  }
  const std::string kind = j.value("kind", std::string{});

  std::vector<int> points;
  std::vector<double> sigma;
  if (!j.contains("points") || !j.at("points").is_array()) throw SpecError("$.points", "expected an array");
  if (!j.contains("sigma") || !j.at("sigma").is_array()) throw SpecError("$.sigma", "expected an array");
  for (std::size_t i = 0; i < j.at("points").size(); ++i) {
    const auto& v = j.at("points")[i];
    if (!v.is_number_integer()) throw SpecError("$.points[" + std::to_string(i) + "]", "expected an integer");
    points.push_back(v.get<int>());
  }
  for (std::size_t i = 0; i < j.at("sigma").size(); ++i) {
    const auto& v = j.at("sigma")[i];
    if (!v.is_number() || !(v.get<double>() > 0.0)) {
      throw SpecError("$.sigma[" + std::to_string(i) + "]", "expected a positive number");
    }
    sigma.push_back(v.get<double>());
  }
  if (points.size() != sigma.size()) throw SpecError("$.sigma", "length differs from points");
  if (points.empty()) throw SpecError("$.points", "empty sequence");
  const double lambda = j.value("lambda", 1.0);
  if (!(lambda > 0.0)) throw SpecError("$.lambda", "must be positive");
  std::optional<double> eps;
  if (j.contains("eps")) eps = j.at("eps").get<double>();

  auto check_points = [&](int domain) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i] < 0 || points[i] >= domain) {
        throw SpecError("$.points[" + std::to_string(i) + "]", "outside the domain");
      }
    }
  };

  if (kind == "finite") {
    if (!j.contains("values")) throw SpecError("$.values", "missing");
    Eigen::MatrixXd values = read_matrix(j.at("values"), "$.values");
    check_points(static_cast<int>(values.cols()));
    try {
      FiniteClass cls(std::move(values), j.value("range_bound", 1.0));
      return check_dim_relation(cls, points, sigma, lambda, eps);
    } catch (const SpecError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw SpecError("$.values", e.what());
    }
  }
  if (kind == "linear") {
    if (!j.contains("features")) throw SpecError("$.features", "missing");
    Eigen::MatrixXd features = read_matrix(j.at("features"), "$.features");
    check_points(static_cast<int>(features.rows()));
    try {
      LinearClass cls{FeatureMap(std::move(features))};
      DimReport r;
      r.lambda = lambda;
      r.length = static_cast<int>(points.size());
      r.alpha = *std::min_element(sigma.begin(), sigma.end());
      r.max_sigma = *std::max_element(sigma.begin(), sigma.end());
      r.eps = eps.value_or(1.0 / std::sqrt(static_cast<double>(r.length)));
      r.generalized_dim = generalized_dim(cls, points, sigma, lambda);
      return r;
    } catch (const std::invalid_argument& e) {
      throw SpecError("$.features", e.what());
    }
  }
  throw SpecError("$.kind", "expected \"finite\" or \"linear\"");
}

DimReport evaluate_class_spec_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw SpecError("$", "cannot open " + file.string());
  try {
    return evaluate_class_spec(json::parse(in));
  } catch (const json::exception& e) {
    throw SpecError("$", std::string("malformed document: ") + e.what());
  }
}

}  // namespace mqlucb
