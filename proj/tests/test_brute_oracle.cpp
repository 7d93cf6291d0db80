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
#include "iml/core_model.hpp"

using namespace iml;

TEST_CASE("brute_force_f examples") {
  CHECK(oracle::brute_force_f(3, 3) == 3);
  CHECK(oracle::brute_force_f(3, 4) == 4);
  CHECK(oracle::brute_force_f(1, 0) == 1);
  CHECK(oracle::brute_force_f(4, 4) == 5);
  CHECK_THROWS_AS(oracle::brute_force_f(11, 0), std::invalid_argument);
  CHECK(oracle::brute_force_f(11, 0, 11) >= 11);
}

TEST_CASE("hall_check examples") {
  CHECK_FALSE(oracle::hall_check(3, 4, 3));
  CHECK(oracle::hall_check(3, 4, 4));
  CHECK(oracle::hall_check(1, 5, 1));
  CHECK_FALSE(oracle::hall_check(1, 5, 0));
  CHECK_THROWS_AS(oracle::hall_check(21, 0, 30), std::invalid_argument);
}

TEST_CASE("max_matching_size by deficiency") {
  CHECK(oracle::max_matching_size(3, 4, 3) == 2);
  CHECK(oracle::max_matching_size(4, 4, 4) == 3);
  CHECK(oracle::max_matching_size(2, 0, 2) == 2);
  CHECK(oracle::max_matching_size(5, 0, 0) == 0);
}

TEST_CASE("the two oracles agree on every residue for n <= 8") {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    const auto period = static_cast<std::uint64_t>(lcm_upto(n));
    for (std::uint64_t m = 0; m < period; ++m) {
      const std::uint64_t brute = oracle::brute_force_f(n, m);
      std::uint64_t length = 0;
      while (!oracle::hall_check(n, m, length)) ++length;
      REQUIRE(brute == length);
    }
  }
}
