// Copyright 2026 The iml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "iml/brute_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace iml::oracle {

namespace {

void check_guard(std::uint64_t n, std::uint64_t guard) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > guard) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds oracle guard " +
                                std::to_string(guard));
  }
}

// offsets[i] lists 0-based offsets of multiples of i in the interval.
std::vector<std::vector<std::uint64_t>> multiple_offsets(std::uint64_t n, std::uint64_t m,
                                                         std::uint64_t length) {
  std::vector<std::vector<std::uint64_t>> offsets(n + 1);
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t k = 1; k <= length; ++k) {
      if ((m + k) % i == 0) offsets[i].push_back(k - 1);
    }
  }
  return offsets;
}

bool assign(std::uint64_t i, const std::vector<std::vector<std::uint64_t>>& offsets,
            std::vector<bool>& used) {
  if (i == 0) return true;
  for (std::uint64_t offset : offsets[i]) {
    if (used[offset]) continue;
    used[offset] = true;
    if (assign(i - 1, offsets, used)) return true;
    used[offset] = false;
  }
  return false;
}

// |S| - |N(S)| maximized over all subsets, by bitmask enumeration.
std::int64_t max_deficiency(std::uint64_t n, std::uint64_t m, std::uint64_t length) {
  const auto offsets = multiple_offsets(n, m, length);
  std::int64_t best = 0;
  std::vector<bool> hit(length);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::fill(hit.begin(), hit.end(), false);
    std::int64_t size = 0;
    std::int64_t covered = 0;
    for (std::uint64_t i = 1; i <= n; ++i) {
      if (!(mask >> (i - 1) & 1)) continue;
      ++size;
      for (std::uint64_t offset : offsets[i]) {
        if (!hit[offset]) {
          hit[offset] = true;
          ++covered;
        }
      }
    }
    best = std::max(best, size - covered);
  }
  return best;
}

}  // namespace

std::uint64_t brute_force_f(std::uint64_t n, std::uint64_t m, std::uint64_t guard) {
  check_guard(n, guard);
  for (std::uint64_t length = n;; ++length) {
    const auto offsets = multiple_offsets(n, m, length);
    std::vector<bool> used(length, false);
    if (assign(n, offsets, used)) return length;
  }
}

bool hall_check(std::uint64_t n, std::uint64_t m, std::uint64_t length, std::uint64_t guard) {
  check_guard(n, guard);
  return max_deficiency(n, m, length) == 0;
}

std::uint64_t max_matching_size(std::uint64_t n, std::uint64_t m, std::uint64_t length,
                                std::uint64_t guard) {
  check_guard(n, guard);
  return n - static_cast<std::uint64_t>(max_deficiency(n, m, length));
}

}  // namespace iml::oracle
