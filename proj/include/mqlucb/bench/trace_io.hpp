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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mqlucb/algo/metrics.hpp"

namespace mqlucb {

inline constexpr const char* kTraceHeader = "k,regret,cum_regret,switches,max_bonus,reward";

/// CSV with kTraceHeader; reals are printed with 17 significant digits so
/// that reading a trace back reproduces every row exactly.
void write_trace(std::ostream& out, std::span<const EpisodeRow> rows);
void write_trace(const std::filesystem::path& file, std::span<const EpisodeRow> rows);

/// Throws std::runtime_error naming the line on malformed input.
std::vector<EpisodeRow> read_trace(std::istream& in);
std::vector<EpisodeRow> read_trace(const std::filesystem::path& file);

/// "<label>__seed<N>.csv"
std::string trace_file_name(const std::string& label, unsigned long long seed);
/// Inverse of trace_file_name; false if the name does not match.
bool parse_trace_file_name(const std::string& name, std::string& label, unsigned long long& seed);

}  // namespace mqlucb
