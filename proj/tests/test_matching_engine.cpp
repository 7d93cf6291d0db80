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

#include <set>

#include "iml/brute_oracle.hpp"
#include "iml/matching_engine.hpp"

using namespace iml;

namespace {

void check_consistent(const MatchingState& state) {
  std::uint64_t matched = 0;
  std::set<std::uint64_t> images;
  for (std::uint64_t i = 1; i <= state.n(); ++i) {
    const auto t = state.integer_of(i);
    if (!t) continue;
    ++matched;
    REQUIRE(*t % i == 0);
    REQUIRE(*t > state.m());
    REQUIRE(*t - state.m() <= state.current_length());
    REQUIRE(state.divisor_of(*t) == i);
    REQUIRE(images.insert(*t).second);
  }
  REQUIRE(matched == state.matching_size());
}

}  // namespace

TEST_CASE("new_state is empty") {
  MatchingState a(3, 4);
  CHECK(a.matching_size() == 0);
  CHECK(a.current_length() == 0);
  MatchingState b(1, 0);
  CHECK(b.matching_size() == 0);
  CHECK(b.current_length() == 0);
  CHECK_THROWS_AS(MatchingState(0, 1), std::invalid_argument);
}

TEST_CASE("extend_one reaches the maximum matching") {
  MatchingState a(2, 0);
  a.extend_one();
  a.extend_one();
  CHECK(a.matching_size() == 2);
  CHECK(a.integer_of(1) == 1u);
  CHECK(a.integer_of(2) == 2u);

  MatchingState b(3, 4);
  for (int s = 0; s < 3; ++s) b.extend_one();
  CHECK(b.matching_size() == 2);

  MatchingState c(4, 4);
  for (int s = 0; s < 4; ++s) c.extend_one();
  CHECK(c.matching_size() == 3);
}

TEST_CASE("divisors_of lists divisors up to n in increasing order") {
  MatchingState s(6, 10);
  for (int k = 0; k < 10; ++k) s.extend_one();
  CHECK(std::vector<std::uint32_t>(s.divisors_of(12).begin(), s.divisors_of(12).end()) ==
        std::vector<std::uint32_t>{1, 2, 3, 4, 6});
  CHECK(std::vector<std::uint32_t>(s.divisors_of(17).begin(), s.divisors_of(17).end()) ==
        std::vector<std::uint32_t>{1});
  CHECK(std::vector<std::uint32_t>(s.divisors_of(20).begin(), s.divisors_of(20).end()) ==
        std::vector<std::uint32_t>{1, 2, 4, 5});
  CHECK_THROWS_AS(s.divisors_of(10), std::out_of_range);
  CHECK_THROWS_AS(s.divisors_of(21), std::out_of_range);
}

TEST_CASE("hall_certificate examples") {
  MatchingState a(3, 4);
  for (int s = 0; s < 3; ++s) a.extend_one();
  const auto cert = a.hall_certificate();
  CHECK(cert.violator_set == std::vector<std::uint64_t>{2, 3});
  CHECK(cert.neighborhood_size == 1);

  MatchingState b(2, 0);
  b.extend_one();
  const auto cb = b.hall_certificate();
  CHECK(certificate_holds(2, 0, 1, cb));
  CHECK(cb.violator_set.back() == 2);

  MatchingState c(1, 0);
  const auto cc = c.hall_certificate();
  CHECK(cc.violator_set == std::vector<std::uint64_t>{1});
  CHECK(cc.neighborhood_size == 0);

  MatchingState d(1, 0);
  d.extend_one();
  CHECK(d.perfect());
  CHECK_THROWS_AS(d.hall_certificate(), std::logic_error);
}

TEST_CASE("engine agrees with the deficiency oracle on every residue for n <= 8") {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    const auto period = static_cast<std::uint64_t>(lcm_upto(n));
    for (std::uint64_t m = 0; m < period; ++m) {
      MatchingState state(n, m);
      std::uint64_t previous = 0;
      while (!state.perfect()) {
        state.extend_one();
        REQUIRE(state.matching_size() >= previous);
        REQUIRE(state.matching_size() <= previous + 1);
        previous = state.matching_size();
        REQUIRE(state.matching_size() ==
                oracle::max_matching_size(n, m, state.current_length()));
        if (!state.perfect()) {
          REQUIRE(certificate_holds(n, m, state.current_length(), state.hall_certificate()));
        }
      }
      check_consistent(state);
    }
  }
}

TEST_CASE("engine is deterministic") {
  MatchingState a(40, 123456);
  MatchingState b(40, 123456);
  while (!a.perfect()) a.extend_one();
  while (!b.perfect()) b.extend_one();
  CHECK(a.current_length() == b.current_length());
  CHECK(a.assignment() == b.assignment());
  check_consistent(a);
}

TEST_CASE("hall_certificate_from rejects non-maximum matchings") {
  // n = 2 on (0, 2]: empty matching admits the augmenting path 1 -> 1.
  CHECK_THROWS_AS(hall_certificate_from(2, 0, 2, {0, 0}), std::logic_error);
  CHECK_THROWS_AS(hall_certificate_from(2, 0, 2, {1, 2}), std::logic_error);
  CHECK_THROWS_AS(hall_certificate_from(2, 0, 2, {1, 3}), std::invalid_argument);
}
