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

// Search for max_m f(n, m). By periodicity only m mod lcm(1..n) matters.
//
// Sampled search candidate stream (fixed for a given n, budget and seed):
//   1. m = n, then m = j^2 n' for j = 1..8 and n' = n, n-1, n+1, n-2, n+2.
//   2. Half of the remaining budget: SplitMix64(seed) draws, reduced mod the
//      sampling modulus (lcm(1..n) when below 2^62, else 2^62).
//   3. Hill climbing from the incumbent over m +- 2^j (wrapping at the
//      modulus); strictly better moves reset the step, equal moves are
//      accepted at most `plateau` times in a row.
//   4. Leftover budget goes back to step 2's stream.
// Candidates are deduplicated by residue; the budget counts distinct
// evaluations. The reported best is the largest f with the smallest residue.

#pragma once

#include <cstdint>
#include <string>

#include "iml/exact_solver.hpp"

namespace iml {

struct SearchReport {
  std::uint64_t n = 0;
  std::string strategy;
  std::uint64_t best_m = 0;
  std::uint64_t best_f = 0;
  std::uint64_t f_nn = 0;  // f(n, n)
  std::uint64_t evaluations = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;

  std::int64_t gap() const {
    return static_cast<std::int64_t>(best_f) - static_cast<std::int64_t>(f_nn);
  }
};

inline constexpr std::uint64_t kDefaultResidueCap = 1'000'000;

struct SampledOptions {
  std::uint64_t plateau = 16;
  std::uint64_t max_multiplier = 8;
  unsigned max_step_log2 = 40;
};

// Sampling modulus for n: lcm(1..n) if it is below 2^62, else 2^62.
std::uint64_t sampling_modulus(std::uint64_t n);

// Evaluates every m in [0, lcm(1..n)). Throws std::invalid_argument when the
// residue space exceeds `residue_cap`.
SearchReport exhaustive_max(std::uint64_t n, const FValueFn& f = exact_f, unsigned jobs = 1,
                            std::uint64_t residue_cap = kDefaultResidueCap);

// f(n, m) for every m in [0, lcm(1..n)), index = m.
std::vector<std::uint64_t> residue_profile(std::uint64_t n, const FValueFn& f = exact_f,
                                           unsigned jobs = 1,
                                           std::uint64_t residue_cap = kDefaultResidueCap);

SearchReport sampled_max(std::uint64_t n, std::uint64_t budget, std::uint64_t seed,
                         const FValueFn& f = exact_f, unsigned jobs = 1,
                         const SampledOptions& options = {});

}  // namespace iml
