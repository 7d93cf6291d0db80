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

#include "iml/residue_search.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "iml/core_model.hpp"
#include "iml/parallel.hpp"
#include "iml/splitmix.hpp"

namespace iml {

namespace {

constexpr std::uint64_t kSamplingCeiling = std::uint64_t{1} << 62;

void reverify(const SearchReport& report) {
  const std::uint64_t again = solve_f(report.n, report.best_m).f_value;
  if (again != report.best_f) {
    throw std::logic_error("search result f(" + std::to_string(report.n) + ", " +
                           std::to_string(report.best_m) + ") = " +
                           std::to_string(report.best_f) + " failed re-solve (" +
                           std::to_string(again) + ")");
  }
}

// Evaluated residues and the incumbent, with a budget of distinct
// evaluations.
class Ledger {
 public:
  Ledger(std::uint64_t n, std::uint64_t budget, const FValueFn& f, unsigned jobs)
      : n_(n), budget_left_(budget), f_(f), jobs_(jobs) {}

  std::uint64_t budget_left() const { return budget_left_; }
  bool seen(std::uint64_t m) const { return values_.count(m) != 0; }
  std::uint64_t value(std::uint64_t m) const { return values_.at(m); }
  std::uint64_t evaluations() const { return values_.size(); }
  std::uint64_t best_m() const { return best_m_; }
  std::uint64_t best_f() const { return best_f_; }

  void evaluate(const std::vector<std::uint64_t>& candidates) {
    std::vector<std::uint64_t> fresh;
    std::set<std::uint64_t> batch;
    for (std::uint64_t m : candidates) {
      if (fresh.size() == budget_left_) break;
      if (seen(m) || !batch.insert(m).second) continue;
      fresh.push_back(m);
    }
    const auto values =
        parallel_map(fresh.size(), jobs_, [&](std::size_t i) { return f_(n_, fresh[i]); });
    for (std::size_t i = 0; i < fresh.size(); ++i) record(fresh[i], values[i]);
    budget_left_ -= fresh.size();
  }

 private:
  void record(std::uint64_t m, std::uint64_t value) {
    values_.emplace(m, value);
    if (value > best_f_ || (value == best_f_ && m < best_m_)) {
      best_f_ = value;
      best_m_ = m;
    }
  }

  std::uint64_t n_;
  std::uint64_t budget_left_;
  const FValueFn& f_;
  unsigned jobs_;
  std::map<std::uint64_t, std::uint64_t> values_;
  std::uint64_t best_m_ = 0;
  std::uint64_t best_f_ = 0;
};

void sample_uniform(Ledger& ledger, SplitMix64& rng, std::uint64_t modulus,
                    std::uint64_t target) {
  std::vector<std::uint64_t> draws;
  std::set<std::uint64_t> distinct;
  const std::uint64_t attempts = 4 * target + 16;
  for (std::uint64_t a = 0; a < attempts && distinct.size() < target; ++a) {
    const std::uint64_t m = rng.next() % modulus;
    if (ledger.seen(m) || !distinct.insert(m).second) continue;
    draws.push_back(m);
  }
  ledger.evaluate(draws);
}

void hill_climb(Ledger& ledger, std::uint64_t modulus, const SampledOptions& options) {
  std::uint64_t position = ledger.best_m();
  std::uint64_t height = ledger.best_f();
  std::uint64_t plateau_left = options.plateau;
  std::set<std::uint64_t> visited{position};
  unsigned step_log = 0;
  while (ledger.budget_left() > 0 && step_log <= options.max_step_log2) {
    const std::uint64_t step = std::uint64_t{1} << step_log;
    if (step >= modulus) break;
    bool moved = false;
    for (int direction = 0; direction < 2 && !moved; ++direction) {
      const std::uint64_t candidate =
          direction == 0 ? (position + step) % modulus : (position + modulus - step) % modulus;
      if (!ledger.seen(candidate)) {
        if (ledger.budget_left() == 0) break;
        ledger.evaluate({candidate});
      }
      const std::uint64_t value = ledger.value(candidate);
      if (value > height) {
        plateau_left = options.plateau;
        moved = true;
      } else if (value == height && plateau_left > 0 && !visited.count(candidate)) {
        --plateau_left;
        moved = true;
      }
      if (moved) {
        position = candidate;
        height = value;
        visited.insert(candidate);
      }
    }
    step_log = moved ? 0 : step_log + 1;
  }
}

}  // namespace

std::uint64_t sampling_modulus(std::uint64_t n) {
  const BigInt period = lcm_upto(n);
  if (period < kSamplingCeiling) return static_cast<std::uint64_t>(period);
  return kSamplingCeiling;
}

std::vector<std::uint64_t> residue_profile(std::uint64_t n, const FValueFn& f, unsigned jobs,
                                           std::uint64_t residue_cap) {
  const BigInt period = lcm_upto(n);
  if (period > residue_cap) {
    throw std::invalid_argument("residue space lcm(1.." + std::to_string(n) + ") = " +
                                period.str() + " exceeds cap " + std::to_string(residue_cap));
  }
  const auto count = static_cast<std::uint64_t>(period);
  return parallel_map(count, jobs, [&](std::size_t m) { return f(n, m); });
}

SearchReport exhaustive_max(std::uint64_t n, const FValueFn& f, unsigned jobs,
                            std::uint64_t residue_cap) {
  const auto profile = residue_profile(n, f, jobs, residue_cap);
  SearchReport report;
  report.n = n;
  report.strategy = "exhaustive";
  report.exhaustive = true;
  report.evaluations = profile.size();
  for (std::uint64_t m = 0; m < profile.size(); ++m) {
    if (profile[m] > report.best_f) {
      report.best_f = profile[m];
      report.best_m = m;
    }
  }
  report.f_nn = profile[n % profile.size()];
  reverify(report);
  return report;
}

SearchReport sampled_max(std::uint64_t n, std::uint64_t budget, std::uint64_t seed,
                         const FValueFn& f, unsigned jobs, const SampledOptions& options) {
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  validate_instance(n, 0);
  const std::uint64_t modulus = sampling_modulus(n);
  Ledger ledger(n, budget, f, jobs);

  std::vector<std::uint64_t> seeds{n % modulus};
  for (std::uint64_t j = 1; j <= options.max_multiplier; ++j) {
    for (std::int64_t shift : {0, -1, 1, -2, 2}) {
      const std::int64_t near = static_cast<std::int64_t>(n) + shift;
      if (near < 1) continue;
      seeds.push_back(j * j * static_cast<std::uint64_t>(near) % modulus);
    }
  }
  ledger.evaluate(seeds);
  const std::uint64_t f_nn = ledger.value(n % modulus);

  SplitMix64 rng(seed);
  sample_uniform(ledger, rng, modulus, ledger.budget_left() / 2);
  hill_climb(ledger, modulus, options);
  sample_uniform(ledger, rng, modulus, ledger.budget_left());

  SearchReport report;
  report.n = n;
  report.strategy = "sampled";
  report.best_m = ledger.best_m();
  report.best_f = ledger.best_f();
  report.f_nn = f_nn;
  report.evaluations = ledger.evaluations();
  report.exhaustive = false;
  report.seed = seed;
  reverify(report);
  return report;
}

}  // namespace iml
