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

#include "iml/json_io.hpp"

namespace iml {

nlohmann::ordered_json witness_to_json(const WitnessDocument& doc) {
  nlohmann::ordered_json j;
  j["n"] = doc.n;
  j["m"] = doc.m;
  j["L"] = doc.length;
  j["assignment"] = doc.witness.assignment;
  return j;
}

WitnessDocument witness_from_json(const nlohmann::json& j) {
  WitnessDocument doc;
  doc.n = j.at("n").get<std::uint64_t>();
  doc.m = j.at("m").get<std::uint64_t>();
  doc.length = j.at("L").get<std::uint64_t>();
  doc.witness.assignment = j.at("assignment").get<std::vector<std::uint64_t>>();
  return doc;
}

nlohmann::ordered_json solve_result_to_json(const SolveResult& result) {
  nlohmann::ordered_json j;
  j["n"] = result.instance.n;
  j["m"] = result.instance.m;
  j["f"] = result.f_value;
  j["witness"] = result.witness.assignment;
  j["violator"] = result.certificate.violator_set;
  return j;
}

}  // namespace iml
