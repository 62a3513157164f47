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

#include "mqlucb/eluder/dim_report_io.hpp"

#include <stdexcept>

namespace mqlucb {

nlohmann::json dim_report_to_json(const DimReport& r) {
  nlohmann::json j;
  j["schema"] = kDimReportSchema;
  j["generalized_dim"] = r.generalized_dim;
  j["eluder_dim"] = r.eluder_dim ? nlohmann::json(*r.eluder_dim) : nlohmann::json(nullptr);
  j["rhs"] = r.rhs;
  j["ratio"] = r.ratio;
  j["violation"] = r.violation;
  j["params"] = {{"lambda", r.lambda}, {"alpha", r.alpha}, {"M", r.max_sigma},
                 {"T", r.length},      {"eps", r.eps},     {"constant", r.constant}};
  return j;
}

DimReport dim_report_from_json(const nlohmann::json& j) {
  if (j.value("schema", std::string{}) != kDimReportSchema) {
    throw std::invalid_argument("expected schema dimreport/v1");
  }
  try {
    DimReport r;
    r.generalized_dim = j.at("generalized_dim").get<double>();
    if (!j.at("eluder_dim").is_null()) r.eluder_dim = j.at("eluder_dim").get<int>();
    r.rhs = j.at("rhs").get<double>();
    r.ratio = j.at("ratio").get<double>();
    r.violation = j.at("violation").get<bool>();
    const auto& p = j.at("params");
    r.lambda = p.at("lambda").get<double>();
    r.alpha = p.at("alpha").get<double>();
    r.max_sigma = p.at("M").get<double>();
    r.length = p.at("T").get<int>();
    r.eps = p.at("eps").get<double>();
    r.constant = p.at("constant").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed dim report: ") + e.what());
  }
}

}  // namespace mqlucb
