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

#include "iml/result_store.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "iml/core_model.hpp"

namespace iml {

namespace {

using Records = std::map<std::tuple<std::string, std::uint64_t, std::uint64_t>, std::uint64_t>;

std::string encode(const CacheRecord& r) {
  nlohmann::ordered_json j;
  j["v"] = r.version;
  j["n"] = r.n;
  j["mc"] = r.m_canonical;
  j["f"] = r.f_value;
  return j.dump();
}

void check_range(std::uint64_t n, std::uint64_t f_value) {
  if (n < 1 || f_value < n || f_value > n * n) {
    throw IntegrityError("f = " + std::to_string(f_value) + " outside [n, n^2] for n = " +
                         std::to_string(n));
  }
}

void insert(Records& records, const CacheRecord& r, const std::string& origin) {
  check_range(r.n, r.f_value);
  auto [it, inserted] = records.emplace(std::make_tuple(r.version, r.n, r.m_canonical), r.f_value);
  if (!inserted && it->second != r.f_value) {
    throw IntegrityError(origin + ": conflicting f for n = " + std::to_string(r.n) +
                         ", mc = " + std::to_string(r.m_canonical) + " (" +
                         std::to_string(it->second) + " vs " + std::to_string(r.f_value) + ")");
  }
}

// Returns the number of lines read.
std::size_t load(const std::filesystem::path& path, Records& records) {
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) return 0;
    throw StoreError("cannot read " + path.string());
  }
  std::size_t lines = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++lines;
    CacheRecord r;
    try {
      const auto j = nlohmann::json::parse(line);
      r.version = j.at("v").get<std::string>();
      r.n = j.at("n").get<std::uint64_t>();
      r.m_canonical = j.at("mc").get<std::uint64_t>();
      r.f_value = j.at("f").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
      throw StoreError(path.string() + ":" + std::to_string(lines) + ": " + e.what());
    }
    insert(records, r, path.string());
  }
  if (in.bad()) throw StoreError("read failure on " + path.string());
  return lines;
}

void write_all(const std::filesystem::path& path, const Records& records) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw StoreError("cannot write " + tmp.string());
    for (const auto& [key, f] : records) {
      out << encode({std::get<0>(key), std::get<1>(key), std::get<2>(key), f}) << '\n';
    }
    out.flush();
    if (!out) throw StoreError("write failure on " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw StoreError("cannot replace " + path.string() + ": " + ec.message());
}

}  // namespace

ResultStore::ResultStore(std::filesystem::path path, std::string version)
    : path_(std::move(path)), version_(std::move(version)) {
  if (version_.empty()) throw std::invalid_argument("engine version must be non-empty");
  const std::size_t lines = load(path_, records_);
  if (lines != records_.size()) write_all(path_, records_);
}

std::uint64_t ResultStore::canonical(std::uint64_t n, std::uint64_t m) const {
  auto it = period_.find(n);
  if (it == period_.end()) {
    const BigInt period = lcm_upto(n);
    const std::uint64_t capped = period > std::numeric_limits<std::uint64_t>::max()
                                     ? 0
                                     : static_cast<std::uint64_t>(period);
    it = period_.emplace(n, capped).first;
  }
  return it->second == 0 ? m : m % it->second;
}

std::optional<std::uint64_t> ResultStore::get(std::uint64_t n, std::uint64_t m) const {
  std::lock_guard lock(mutex_);
  const auto it = records_.find(std::make_tuple(version_, n, canonical(n, m)));
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void ResultStore::put(std::uint64_t n, std::uint64_t m, std::uint64_t f_value) {
  std::lock_guard lock(mutex_);
  const CacheRecord record{version_, n, canonical(n, m), f_value};
  check_range(n, f_value);
  const auto key = std::make_tuple(version_, n, record.m_canonical);
  if (const auto it = records_.find(key); it != records_.end()) {
    if (it->second == f_value) return;
    throw IntegrityError("conflicting put for n = " + std::to_string(n) + ", mc = " +
                         std::to_string(record.m_canonical) + " (stored " +
                         std::to_string(it->second) + ", new " + std::to_string(f_value) + ")");
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw StoreError("cannot append to " + path_.string());
  out << encode(record) << '\n';
  out.flush();
  if (!out) throw StoreError("write failure on " + path_.string());
  records_.emplace(key, f_value);
}

std::vector<CacheRecord> ResultStore::records() const {
  std::lock_guard lock(mutex_);
  std::vector<CacheRecord> out;
  out.reserve(records_.size());
  for (const auto& [key, f] : records_) {
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), f});
  }
  return out;
}

std::size_t ResultStore::size() const {
  std::lock_guard lock(mutex_);
  return records_.size();
}

std::size_t ResultStore::merge(const std::filesystem::path& a, const std::filesystem::path& b,
                               const std::filesystem::path& out) {
  for (const auto& p : {a, b}) {
    if (!std::filesystem::exists(p)) throw StoreError("no such store: " + p.string());
  }
  Records merged;
  load(a, merged);
  load(b, merged);
  write_all(out, merged);
  return merged.size();
}

FValueFn cached_f(ResultStore& store) {
  return [&store](std::uint64_t n, std::uint64_t m) {
    if (auto hit = store.get(n, m)) return *hit;
    const std::uint64_t f = exact_f(n, m);
    store.put(n, m, f);
    return f;
  };
}

}  // namespace iml
