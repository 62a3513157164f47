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

#include <nlohmann/json.hpp>

#include "mqlucb/eluder/dim_relation.hpp"

namespace mqlucb {

inline constexpr const char* kDimReportSchema = "dimreport/v1";

nlohmann::json dim_report_to_json(const DimReport& report);
/// Throws std::invalid_argument on a wrong schema or missing field.
DimReport dim_report_from_json(const nlohmann::json& doc);

}  // namespace mqlucb
