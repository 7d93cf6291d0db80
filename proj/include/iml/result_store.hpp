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

// Append-only memo of f-values, one JSON object per line:
//   {"v": "<engine version>", "n": <n>, "mc": <m mod lcm(1..n)>, "f": <f>}
// Opening a store deduplicates identical lines and rewrites the file if any
// were found. Lines tagged with another engine version are kept on disk but
// are invisible to get().

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "iml/exact_solver.hpp"

namespace iml {

// Bump on any change to solver tie-breaking.
inline constexpr const char* kEngineVersion = "iml-kuhn-1";

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CacheRecord {
  std::string version;
  std::uint64_t n = 0;
  std::uint64_t m_canonical = 0;
  std::uint64_t f_value = 0;

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

class ResultStore {
 public:
  explicit ResultStore(std::filesystem::path path, std::string version = kEngineVersion);

  std::optional<std::uint64_t> get(std::uint64_t n, std::uint64_t m) const;

  // Idempotent for identical values; a different f for an existing key
  // throws IntegrityError.
  void put(std::uint64_t n, std::uint64_t m, std::uint64_t f_value);

  // All records on disk, every version, in key order.
  std::vector<CacheRecord> records() const;
  std::size_t size() const;

  const std::filesystem::path& path() const { return path_; }
  const std::string& version() const { return version_; }

  // Union of two store files written to `out`. Conflicting values for a key
  // throw IntegrityError and leave `out` untouched.
  static std::size_t merge(const std::filesystem::path& a, const std::filesystem::path& b,
                           const std::filesystem::path& out);

 private:
  using Key = std::tuple<std::string, std::uint64_t, std::uint64_t>;

  std::uint64_t canonical(std::uint64_t n, std::uint64_t m) const;

  std::filesystem::path path_;
  std::string version_;
  std::map<Key, std::uint64_t> records_;
  mutable std::map<std::uint64_t, std::uint64_t> period_;  // n -> lcm, when < 2^64
  mutable std::mutex mutex_;
};

// f(n, m) through the store: cache hit, else solve and record.
FValueFn cached_f(ResultStore& store);

}  // namespace iml
