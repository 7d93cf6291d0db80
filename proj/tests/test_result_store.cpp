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

#include <filesystem>
#include <fstream>
#include <random>

#include "iml/result_store.hpp"

using namespace iml;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "iml_store_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t lines = 0;
  std::string line;
  while (std::getline(in, line)) lines += !line.empty();
  return lines;
}

}  // namespace

TEST_CASE("get and put") {
  const auto path = scratch("basic.jsonl");
  ResultStore store(path);
  CHECK_FALSE(store.get(3, 4).has_value());
  store.put(3, 4, 4);
  CHECK(store.get(3, 4) == 4u);
  CHECK(store.get(3, 10) == 4u);  // 10 mod 6 = 4
  store.put(3, 4, 4);
  CHECK(store.size() == 1);
  CHECK(line_count(path) == 1);
  CHECK_THROWS_AS(store.put(3, 10, 5), IntegrityError);
  CHECK_THROWS_AS(store.put(3, 1, 10), IntegrityError);  // outside [n, n^2]
}

TEST_CASE("line format") {
  const auto path = scratch("format.jsonl");
  ResultStore(path).put(3, 10, 4);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == R"({"v":"iml-kuhn-1","n":3,"mc":4,"f":4})");
}

TEST_CASE("reopen, version isolation and compaction") {
  const auto path = scratch("reopen.jsonl");
  {
    ResultStore store(path);
    store.put(5, 7, solve_f(5, 7).f_value);
    store.put(4, 4, 5);
  }
  {
    std::ofstream out(path, std::ios::app);
    out << R"({"v":"iml-kuhn-1","n":4,"mc":4,"f":5})" << '\n';
  }
  CHECK(line_count(path) == 3);
  ResultStore again(path);
  CHECK(again.size() == 2);
  CHECK(line_count(path) == 2);
  CHECK(again.get(4, 4) == 5u);

  ResultStore bumped(path, "iml-kuhn-2");
  CHECK_FALSE(bumped.get(4, 4).has_value());
  bumped.put(4, 4, 5);
  CHECK(bumped.size() == 3);
}

TEST_CASE("corrupted store is rejected") {
  const auto conflict = scratch("conflict.jsonl");
  {
    std::ofstream out(conflict);
    out << R"({"v":"x","n":3,"mc":4,"f":4})" << '\n' << R"({"v":"x","n":3,"mc":4,"f":5})" << '\n';
  }
  CHECK_THROWS_AS(ResultStore(conflict, "x"), IntegrityError);

  const auto garbage = scratch("garbage.jsonl");
  {
    std::ofstream out(garbage);
    out << "not json\n";
  }
  CHECK_THROWS_AS(ResultStore{garbage}, StoreError);
}

TEST_CASE("merging shards is associative and conflict-free") {
  const auto a = scratch("a.jsonl");
  const auto b = scratch("b.jsonl");
  const auto c = scratch("c.jsonl");
  {
    ResultStore sa(a), sb(b), sc(c);
    for (std::uint64_t m = 0; m < 30; ++m) {
      const std::uint64_t n = 3 + m % 5;
      ResultStore& target = m % 3 == 0 ? sa : (m % 3 == 1 ? sb : sc);
      target.put(n, m, solve_f(n, m).f_value);
    }
    sa.put(7, 100, solve_f(7, 100).f_value);
    sb.put(7, 100, solve_f(7, 100).f_value);
  }
  const auto ab = scratch("ab.jsonl");
  const auto ab_c = scratch("ab_c.jsonl");
  const auto bc = scratch("bc.jsonl");
  const auto a_bc = scratch("a_bc.jsonl");
  ResultStore::merge(a, b, ab);
  ResultStore::merge(ab, c, ab_c);
  ResultStore::merge(b, c, bc);
  ResultStore::merge(a, bc, a_bc);
  CHECK(ResultStore(ab_c).records() == ResultStore(a_bc).records());
  std::ifstream x(ab_c), y(a_bc);
  CHECK(std::string(std::istreambuf_iterator<char>(x), {}) ==
        std::string(std::istreambuf_iterator<char>(y), {}));

  const auto bad = scratch("bad.jsonl");
  {
    std::ofstream out(bad);
    out << R"({"v":"iml-kuhn-1","n":7,"mc":100,"f":)" << solve_f(7, 100).f_value + 1 << "}\n";
  }
  const auto never = scratch("never.jsonl");
  CHECK_THROWS_AS(ResultStore::merge(a, bad, never), IntegrityError);
  CHECK_FALSE(fs::exists(never));
}

TEST_CASE("cached_f round-trips values") {
  const auto path = scratch("cached.jsonl");
  ResultStore store(path);
  const FValueFn f = cached_f(store);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const std::uint64_t n = rng() % 20 + 1;
    const std::uint64_t m = rng() % 100000;
    const std::uint64_t direct = solve_f(n, m).f_value;
    CHECK(f(n, m) == direct);
    CHECK(f(n, m) == direct);
    CHECK(ResultStore(path).get(n, m) == direct);
  }
}
