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

// Domain types for f(n, m): the least L such that (m, m + L] holds distinct
// a_1, ..., a_n with i | a_i.
//
// Upper bound used throughout: at L = n^2 every divisor i has at least
// floor(n^2 / i) >= n multiples in the interval, so every subset S of
// divisors sees at least n >= |S| integers and Hall's condition holds.
// Hence n <= f(n, m) <= n^2.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace iml {

using BigInt = boost::multiprecision::cpp_int;

// Divisor counts above this bound would push n^2 past 32-bit slot indices.
inline constexpr std::uint64_t kMaxDivisors = 65535;

struct ProblemInstance {
  std::uint64_t n = 1;
  std::uint64_t m = 0;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

// Throws std::invalid_argument unless n is in [1, kMaxDivisors] and
// m + n^2 fits in 64 bits.
void validate_instance(std::uint64_t n, std::uint64_t m);

// Dense assignment: assignment[i - 1] holds a_i. Zero marks a missing entry
// (a_i > m >= 0 so zero is never a legal image).
struct Witness {
  std::vector<std::uint64_t> assignment;

  std::uint64_t at(std::uint64_t divisor) const { return assignment.at(divisor - 1); }
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct HallCertificate {
  std::vector<std::uint64_t> violator_set;  // ascending
  std::uint64_t neighborhood_size = 0;
};

struct SolveResult {
  ProblemInstance instance;
  std::uint64_t f_value = 0;
  Witness witness;              // valid at L = f_value
  HallCertificate certificate;  // valid at L = f_value - 1
};

// Integers t in (m, m + length] with i | t, ascending.
std::vector<std::uint64_t> multiples_in_interval(std::uint64_t i, std::uint64_t m,
                                                 std::uint64_t length);

// floor((m + length) / i) - floor(m / i)
std::uint64_t multiples_count(std::uint64_t i, std::uint64_t m, std::uint64_t length);

// lcm(1, ..., n), exact.
BigInt lcm_upto(std::uint64_t n);

// m mod lcm_upto(n). f(n, .) is periodic with that period because each edge
// test i | t only depends on t mod i.
std::uint64_t canonical_m(std::uint64_t n, std::uint64_t m);

enum class WitnessFault { kNone, kTotality, kRange, kDivisibility, kInjectivity };

const char* to_string(WitnessFault fault);

struct WitnessVerdict {
  bool ok = false;
  WitnessFault fault = WitnessFault::kNone;
  std::uint64_t divisor = 0;  // first offending i, 0 when not applicable
  std::string message;

  explicit operator bool() const { return ok; }
};

// Clauses are checked in the order totality, range, divisibility,
// injectivity; the first failing clause is reported.
WitnessVerdict verify_witness(std::uint64_t n, std::uint64_t m, std::uint64_t length,
                              const Witness& witness);

// Number of integers in (m, m + length] divisible by at least one element of
// `divisors`.
std::uint64_t joint_multiples_count(const std::vector<std::uint64_t>& divisors,
                                    std::uint64_t m, std::uint64_t length);

// Recounts the neighborhood and checks |N(S)| < |S| with S a nonempty set of
// distinct divisors in [1, n].
bool certificate_holds(std::uint64_t n, std::uint64_t m, std::uint64_t length,
                       const HallCertificate& certificate);

}  // namespace iml
