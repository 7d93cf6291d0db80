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

#include "iml/core_model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace iml {

void validate_instance(std::uint64_t n, std::uint64_t m) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > kMaxDivisors) {
    throw std::invalid_argument("n must not exceed " + std::to_string(kMaxDivisors));
  }
  if (m > std::numeric_limits<std::uint64_t>::max() - n * n) {
    throw std::invalid_argument("m + n^2 does not fit in 64 bits");
  }
}

std::vector<std::uint64_t> multiples_in_interval(std::uint64_t i, std::uint64_t m,
                                                 std::uint64_t length) {
  if (i == 0) throw std::invalid_argument("divisor must be positive");
  std::vector<std::uint64_t> out;
  out.reserve(multiples_count(i, m, length));
  const std::uint64_t end = m + length;
  for (std::uint64_t t = (m / i + 1) * i; t <= end && t > m; t += i) {
    out.push_back(t);
    if (t > end - i) break;
  }
  return out;
}

std::uint64_t multiples_count(std::uint64_t i, std::uint64_t m, std::uint64_t length) {
  if (i == 0) throw std::invalid_argument("divisor must be positive");
  return (m + length) / i - m / i;
}

BigInt lcm_upto(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  BigInt acc = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    const BigInt step = i;
    acc = acc / boost::multiprecision::gcd(acc, step) * step;
  }
  return acc;
}

std::uint64_t canonical_m(std::uint64_t n, std::uint64_t m) {
  const BigInt period = lcm_upto(n);
  if (period > m) return m;
  return static_cast<std::uint64_t>(BigInt(m) % period);
}

const char* to_string(WitnessFault fault) {
  switch (fault) {
    case WitnessFault::kNone: return "none";
    case WitnessFault::kTotality: return "totality";
    case WitnessFault::kRange: return "range";
    case WitnessFault::kDivisibility: return "divisibility";
    case WitnessFault::kInjectivity: return "injectivity";
  }
  return "unknown";
}

namespace {

WitnessVerdict fail(WitnessFault fault, std::uint64_t divisor, std::string message) {
  return WitnessVerdict{false, fault, divisor, std::move(message)};
}

}  // namespace

WitnessVerdict verify_witness(std::uint64_t n, std::uint64_t m, std::uint64_t length,
                              const Witness& witness) {
  const auto& a = witness.assignment;
  if (a.size() != n) {
    return fail(WitnessFault::kTotality, 0,
                "assignment has " + std::to_string(a.size()) + " entries, expected " +
                    std::to_string(n));
  }
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (a[i - 1] == 0) return fail(WitnessFault::kTotality, i, "a_" + std::to_string(i) + " missing");
  }
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t t = a[i - 1];
    if (t <= m || t - m > length) {
      return fail(WitnessFault::kRange, i,
                  "a_" + std::to_string(i) + " = " + std::to_string(t) + " outside (" +
                      std::to_string(m) + ", " + std::to_string(m) + " + " +
                      std::to_string(length) + "]");
    }
  }
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (a[i - 1] % i != 0) {
      return fail(WitnessFault::kDivisibility, i,
                  std::to_string(i) + " does not divide " + std::to_string(a[i - 1]));
    }
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted;
  sorted.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) sorted.emplace_back(a[i - 1], i);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 1; j < sorted.size(); ++j) {
    if (sorted[j].first == sorted[j - 1].first) {
      const std::uint64_t later = std::max(sorted[j].second, sorted[j - 1].second);
      const std::uint64_t earlier = std::min(sorted[j].second, sorted[j - 1].second);
      return fail(WitnessFault::kInjectivity, later,
                  "a_" + std::to_string(earlier) + " = a_" + std::to_string(later) + " = " +
                      std::to_string(sorted[j].first));
    }
  }
  return WitnessVerdict{true, WitnessFault::kNone, 0, {}};
}

std::uint64_t joint_multiples_count(const std::vector<std::uint64_t>& divisors,
                                    std::uint64_t m, std::uint64_t length) {
  std::vector<bool> hit(length, false);
  std::uint64_t count = 0;
  for (std::uint64_t i : divisors) {
    if (i == 0) throw std::invalid_argument("divisor must be positive");
    for (std::uint64_t t : multiples_in_interval(i, m, length)) {
      const std::uint64_t offset = t - m - 1;
      if (!hit[offset]) {
        hit[offset] = true;
        ++count;
      }
    }
  }
  return count;
}

bool certificate_holds(std::uint64_t n, std::uint64_t m, std::uint64_t length,
                       const HallCertificate& certificate) {
  const auto& s = certificate.violator_set;
  if (s.empty()) return false;
  std::vector<std::uint64_t> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.front() < 1 || sorted.back() > n) return false;
  const std::uint64_t recount = joint_multiples_count(sorted, m, length);
  return recount == certificate.neighborhood_size && recount < sorted.size();
}

}  // namespace iml
