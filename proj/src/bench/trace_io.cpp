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

#include "mqlucb/bench/trace_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mqlucb {

void write_trace(std::ostream& out, std::span<const EpisodeRow> rows) {
  out << kTraceHeader << '\n';
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%d,%.17g,%.17g\n", r.k, r.regret, r.cum_regret,
                  r.switches, r.max_bonus, r.reward);
    out << buf;
  }
}

void write_trace(const std::filesystem::path& file, std::span<const EpisodeRow> rows) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  write_trace(out, rows);
}

namespace {

template <typename T>
T parse_field(std::string_view s, std::size_t line) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::runtime_error("trace line " + std::to_string(line) + ": bad field '" +
                             std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<EpisodeRow> read_trace(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw std::runtime_error("trace line 1: expected header " + std::string(kTraceHeader));
  }
  std::vector<EpisodeRow> rows;
  std::size_t n = 1;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    std::vector<std::string_view> f;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
      f.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    f.push_back(rest);
    if (f.size() != 6) throw std::runtime_error("trace line " + std::to_string(n) + ": expected 6 fields");
    rows.push_back({parse_field<int>(f[0], n), parse_field<double>(f[1], n),
                    parse_field<double>(f[2], n), parse_field<int>(f[3], n),
                    parse_field<double>(f[4], n), parse_field<double>(f[5], n)});
  }
  return rows;
}

std::vector<EpisodeRow> read_trace(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  return read_trace(in);
}

std::string trace_file_name(const std::string& label, unsigned long long seed) {
  return label + "__seed" + std::to_string(seed) + ".csv";
}

bool parse_trace_file_name(const std::string& name, std::string& label, unsigned long long& seed) {
  const std::string suffix = ".csv";
  const auto sep = name.rfind("__seed");
  if (sep == std::string::npos || sep == 0 || name.size() < suffix.size() ||
      name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) {
    return false;
  }
  const std::string digits = name.substr(sep + 6, name.size() - suffix.size() - sep - 6);
  if (digits.empty()) return false;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return false;
  label = name.substr(0, sep);
  return true;
}

}  // namespace mqlucb
