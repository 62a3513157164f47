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

#include "mqlucb/eluder/eluder_dim.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mqlucb {

namespace {

struct Pair {
  std::vector<double> sq;  // (f1(z) - f2(z))^2 per point
};

// Longest independent sequence at a fixed threshold t. For e' just below t,
// "|diff(z)| > e'" reads |diff(z)| >= t and "sqrt(S) <= e'" reads S < t^2.
//
// A repeated point is never independent: its first occurrence already adds
// diff(z)^2 >= t^2 to every pair that could witness it. Sequences therefore
// visit distinct points and the state is the set of points used so far.
int longest_at(const std::vector<Pair>& pairs, int n, double t) {
  const double t2 = t * t;
  std::vector<std::vector<int>> witnesses(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (int z = 0; z < n; ++z) {
      if (pairs[p].sq[static_cast<std::size_t>(z)] >= t2) {
        witnesses[static_cast<std::size_t>(z)].push_back(static_cast<int>(p));
      }
    }
  }
  std::vector<int> memo(std::size_t{1} << n, -1);
  std::function<int(unsigned)> solve = [&](unsigned mask) -> int {
    int& best = memo[mask];
    if (best >= 0) return best;
    best = 0;
    for (int z = 0; z < n; ++z) {
      if (mask & (1u << z)) continue;
      const bool independent = std::any_of(
          witnesses[static_cast<std::size_t>(z)].begin(), witnesses[static_cast<std::size_t>(z)].end(),
          [&](int p) {
            double s = 0.0;
            for (int y = 0; y < n; ++y) {
              if (mask & (1u << y)) s += pairs[static_cast<std::size_t>(p)].sq[static_cast<std::size_t>(y)];
            }
            return s < t2;
          });
      if (independent) best = std::max(best, 1 + solve(mask | (1u << z)));
    }
    return best;
  };
  return solve(0u);
}

}  // namespace

int eluder_dim_bruteforce(const Eigen::MatrixXd& values, double eps) {
  const auto nf = values.rows();
  const auto nz = values.cols();
  if (nz > kEluderMaxPoints) throw std::invalid_argument("eluder search supports at most 12 points");
  if (nf > kEluderMaxFunctions) throw std::invalid_argument("eluder search supports at most 64 functions");
  if (eps < 0.0) throw std::invalid_argument("eps must be nonnegative");

  std::vector<Pair> pairs;
  std::vector<double> thresholds;
  for (Eigen::Index i = 0; i < nf; ++i) {
    for (Eigen::Index j = i + 1; j < nf; ++j) {
      Pair p;
      p.sq.resize(static_cast<std::size_t>(nz));
      bool differs = false;
      for (Eigen::Index z = 0; z < nz; ++z) {
        const double d = std::abs(values(i, z) - values(j, z));
        p.sq[static_cast<std::size_t>(z)] = d * d;
        if (d > eps) {
          thresholds.push_back(d);
          differs = true;
        }
      }
      if (differs) pairs.push_back(std::move(p));
    }
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  // Each regime e' in [previous gap, t) is decided by its supremum t.
  int best = 0;
  for (auto it = thresholds.rbegin(); it != thresholds.rend(); ++it) {
    if (best >= nz) break;
    best = std::max(best, longest_at(pairs, static_cast<int>(nz), *it));
  }
  return best;
}

}  // namespace mqlucb
