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

#include "doctest.h"

#include "iml/brute_oracle.hpp"
#include "iml/exact_solver.hpp"
#include "iml/splitmix.hpp"

using namespace iml;

TEST_CASE("solve_f examples") {
  const auto one = solve_f(1, 7);
  CHECK(one.f_value == 1);
  CHECK(one.witness.assignment == std::vector<std::uint64_t>{8});

  CHECK(solve_f(3, 4).f_value == 4);
  CHECK(solve_f(3, 3).f_value == 3);

  const auto four = solve_f(4, 4);
  CHECK(four.f_value == 5);
  CHECK(verify_witness(4, 4, 5, four.witness).ok);
  CHECK(certificate_holds(4, 4, 4, four.certificate));

  for (std::uint64_t m = 0; m < 100; ++m) {
    REQUIRE(solve_f(2, m).f_value == 2);
    REQUIRE(solve_f(1, m).f_value == 1);
  }
}

TEST_CASE("solve_f_capped") {
  const auto below = solve_f_capped(3, 4, 3);
  REQUIRE(std::holds_alternative<CapExceeded>(below));
  CHECK(std::get<CapExceeded>(below).matching_size == 2);
  CHECK(std::get<CapExceeded>(below).cap == 3);

  const auto at = solve_f_capped(3, 4, 4);
  REQUIRE(std::holds_alternative<SolveResult>(at));
  CHECK(std::get<SolveResult>(at).f_value == 4);

  const auto trivial = solve_f_capped(1, 0, 1);
  REQUIRE(std::holds_alternative<SolveResult>(trivial));
  CHECK(std::get<SolveResult>(trivial).f_value == 1);

  CHECK_THROWS_AS(solve_f_capped(3, 4, 2), std::invalid_argument);
}

TEST_CASE("solver matches brute force and is minimal") {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (std::uint64_t m = 0; m < 60; ++m) {
      const auto r = solve_f(n, m);
      REQUIRE(r.f_value == oracle::brute_force_f(n, m));
      REQUIRE(verify_witness(n, m, r.f_value, r.witness).ok);
      REQUIRE_FALSE(oracle::hall_check(n, m, r.f_value - 1));
      REQUIRE(certificate_holds(n, m, r.f_value - 1, r.certificate));
    }
  }
}

TEST_CASE("minimality up to n = 16") {
  SplitMix64 rng(16);
  for (std::uint64_t n = 9; n <= 16; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const std::uint64_t m = rng.next() % 1'000'000'000;
      const auto r = solve_f(n, m);
      REQUIRE(verify_witness(n, m, r.f_value, r.witness).ok);
      REQUIRE_FALSE(oracle::hall_check(n, m, r.f_value - 1));
      REQUIRE(oracle::hall_check(n, m, r.f_value));
      REQUIRE(certificate_holds(n, m, r.f_value - 1, r.certificate));
      REQUIRE(r.f_value >= n);
      REQUIRE(r.f_value <= n * n);
    }
  }
}

TEST_CASE("solver is periodic in m") {
  SplitMix64 rng(5);
  for (std::uint64_t n = 1; n <= 8; ++n) {
    const auto period = static_cast<std::uint64_t>(lcm_upto(n));
    for (int trial = 0; trial < 50; ++trial) {
      const std::uint64_t m = rng.next() % (std::uint64_t{1} << 40);
      REQUIRE(solve_f(n, m).f_value == solve_f(n, m + period).f_value);
      REQUIRE(solve_f(n, m).f_value == solve_f(n, canonical_m(n, m)).f_value);
    }
  }
}

TEST_CASE("solver handles m near 2^63") {
  const std::uint64_t m = (std::uint64_t{1} << 63) + 12345;
  const auto r = solve_f(30, m);
  CHECK(verify_witness(30, m, r.f_value, r.witness).ok);
  CHECK(r.f_value == solve_f(30, canonical_m(30, m)).f_value);
}

TEST_CASE("witnesses are deterministic") {
  const auto a = solve_f(25, 9999);
  const auto b = solve_f(25, 9999);
  CHECK(a.witness == b.witness);
  CHECK(a.certificate.violator_set == b.certificate.violator_set);
}
