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

#include "iml/exact_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "iml/matching_engine.hpp"

namespace iml {

namespace {

SolveResult finish(const MatchingState& state) {
  const std::uint64_t n = state.n();
  const std::uint64_t m = state.m();
  const std::uint64_t f = state.current_length();

  SolveResult result;
  result.instance = ProblemInstance{n, m};
  result.f_value = f;
  result.witness = state.witness();

  std::vector<std::uint64_t> shrunk = result.witness.assignment;
  const auto last = std::find(shrunk.begin(), shrunk.end(), m + f);
  if (last == shrunk.end()) throw std::logic_error("final integer unmatched at L = f");
  *last = 0;
  result.certificate = hall_certificate_from(n, m, f - 1, shrunk);
  return result;
}

}  // namespace

CappedOutcome solve_f_capped(std::uint64_t n, std::uint64_t m, std::uint64_t cap) {
  validate_instance(n, m);
  if (cap < n) throw std::invalid_argument("cap must be at least n");
  const std::uint64_t limit = std::min(cap, n * n);
  MatchingState state(n, m);
  while (!state.perfect()) {
    if (state.current_length() == limit) {
      if (cap < n * n) return CapExceeded{cap, state.matching_size()};
      throw std::logic_error("no perfect matching at L = n^2 for n = " + std::to_string(n) +
                             ", m = " + std::to_string(m));
    }
    state.extend_one();
  }
  return finish(state);
}

SolveResult solve_f(std::uint64_t n, std::uint64_t m) {
  validate_instance(n, m);
  return std::get<SolveResult>(solve_f_capped(n, m, n * n));
}

std::uint64_t exact_f(std::uint64_t n, std::uint64_t m) { return solve_f(n, m).f_value; }

}  // namespace iml
