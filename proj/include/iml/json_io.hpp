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

// JSON shapes:
//   witness:      {"n": int, "m": int, "L": int, "assignment": [a_1, ..., a_n]}
//   solve result: {"n": int, "m": int, "f": int, "witness": [...], "violator": [...]}

#pragma once

#include <cstdint>

#include "json.hpp"

#include "iml/core_model.hpp"

namespace iml {

struct WitnessDocument {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t length = 0;
  Witness witness;
};

nlohmann::ordered_json witness_to_json(const WitnessDocument& doc);

// Throws nlohmann::json::exception on missing or mistyped fields.
WitnessDocument witness_from_json(const nlohmann::json& j);

nlohmann::ordered_json solve_result_to_json(const SolveResult& result);

}  // namespace iml
