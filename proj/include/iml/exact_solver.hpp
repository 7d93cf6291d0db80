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

#pragma once

#include <cstdint>
#include <functional>
#include <variant>

#include "iml/core_model.hpp"

namespace iml {

// Grows L one integer at a time with a single augmentation per step. The
// witness is the engine's deterministic matching at L = f; the certificate
// comes from the same matching with a_{f} removed, which is maximum for the
// interval of length f - 1.
//
// Throws std::logic_error if no perfect matching appears by L = n^2 (cannot
// happen; see core_model.hpp).
SolveResult solve_f(std::uint64_t n, std::uint64_t m);

struct CapExceeded {
  std::uint64_t cap = 0;
  std::uint64_t matching_size = 0;  // reached at L = cap
};

using CappedOutcome = std::variant<SolveResult, CapExceeded>;

// Requires cap >= n.
CappedOutcome solve_f_capped(std::uint64_t n, std::uint64_t m, std::uint64_t cap);

// Plain value source f(n, m); lets callers swap in a memoized one.
using FValueFn = std::function<std::uint64_t(std::uint64_t n, std::uint64_t m)>;

std::uint64_t exact_f(std::uint64_t n, std::uint64_t m);

}  // namespace iml
