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

// Small-instance oracles that share no code path with the matching engine.

#pragma once

#include <cstdint>

namespace iml::oracle {

inline constexpr std::uint64_t kBruteForceGuard = 10;
inline constexpr std::uint64_t kHallGuard = 20;

// Least L >= n for which backtracking (i = n down to 1, each over unused
// multiples) completes an injective assignment in (m, m + L].
// Throws std::invalid_argument if n exceeds `guard`.
std::uint64_t brute_force_f(std::uint64_t n, std::uint64_t m,
                            std::uint64_t guard = kBruteForceGuard);

// Hall's condition over all 2^n - 1 nonempty subsets.
bool hall_check(std::uint64_t n, std::uint64_t m, std::uint64_t length,
                std::uint64_t guard = kHallGuard);

// Maximum matching size via the deficiency form of Hall's theorem:
// n - max_S (|S| - |N(S)|), with S = {} contributing 0.
std::uint64_t max_matching_size(std::uint64_t n, std::uint64_t m, std::uint64_t length,
                                std::uint64_t guard = kHallGuard);

}  // namespace iml::oracle
