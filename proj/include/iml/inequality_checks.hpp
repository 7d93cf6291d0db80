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

// Finite-n evaluation of the interval-length inequalities.
//
// Logarithms are natural throughout. Comparisons that involve epsilon are
// exact over the rationals; doubles appear only in envelope values and in
// the final 0.36 n log n / log log n term.
//
// Lemma-style inequality kn + f(kn, kn) <= k^2 n + f(n, k^2 n) holds for all
// k, n and is checked as a hard property. The two "large n" predicates
// (f(kn, kn) > (2 + eps) k^2 n and eps k^2 n > f(n, n)) and the chain built
// from them are reported only: at desk scale they are expected to fail.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "iml/core_model.hpp"
#include "iml/exact_solver.hpp"

namespace iml {

using Rational = boost::rational<std::int64_t>;

inline const Rational kEpsilon{1, 100};

struct TheoremParameters {
  std::uint64_t n = 0;
  std::uint64_t k = 0;  // ceil(0.6 sqrt(log n / log log n))
  Rational epsilon = kEpsilon;
};

// Throws std::invalid_argument for n < 3, where log log n <= 0.
TheoremParameters theorem_parameters(std::uint64_t n);

struct Lemma1Sides {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  std::uint64_t lhs = 0;  // kn + f(kn, kn)
  std::uint64_t rhs = 0;  // k^2 n + f(n, k^2 n)

  bool holds() const { return lhs <= rhs; }
};

Lemma1Sides lemma1_sides(std::uint64_t k, std::uint64_t n, const FValueFn& f = exact_f);

// Builds a witness for (kn, m = kn, L = k^2 n - kn + inner_length) from one
// for (n, m = k^2 n, inner_length): a_i = k i for i in (n, kn], the inner
// witness for i in [1, n]. Throws std::invalid_argument if `inner` does not
// verify.
Witness compose_witness(std::uint64_t k, std::uint64_t n, std::uint64_t inner_length,
                        const Witness& inner);

struct Lemma1Row {
  Lemma1Sides sides;
  std::uint64_t composed_length = 0;  // k^2 n - kn + f(n, k^2 n)
  bool composed_valid = false;

  bool ok() const { return sides.holds() && composed_valid && (sides.k != 1 || sides.lhs == sides.rhs); }
};

// One row per (k, n) with 1 <= n <= n_max, 1 <= k <= k_max; rows ordered by
// n, then k. The composed witness is built from a full solve of
// (n, k^2 n), never from a cached value.
std::vector<Lemma1Row> lemma1_grid(std::uint64_t n_max, std::uint64_t k_max,
                                   const FValueFn& f = exact_f, unsigned jobs = 1);

struct Eq2Result {
  bool holds = false;
  std::uint64_t lhs = 0;  // f(kn, kn)
  Rational rhs;           // (2 + eps) k^2 n
};

struct Eq3Result {
  bool holds = false;
  Rational lhs;           // eps k^2 n
  std::uint64_t rhs = 0;  // f(n, n)
};

Eq2Result eq2_predicate(std::uint64_t n, const FValueFn& f = exact_f);
Eq3Result eq3_predicate(std::uint64_t n, const FValueFn& f = exact_f);

// Either an exact rational or a double approximation of an irrational.
struct Quantity {
  Rational exact;
  double approx = 0.0;
  bool is_exact = true;

  static Quantity of(Rational r);
  static Quantity irrational(double v);
  double value() const;
};

struct ChainRow {
  std::string name;
  Quantity lhs;
  Quantity rhs;
  bool holds = false;
  bool analytic = false;  // true by construction, not evaluated
};

// 0.36 n log n / log log n
double gap_term(std::uint64_t n);

// Five links: max_m f >= f(n, k^2 n) >= kn + f(kn, kn) - k^2 n
//   > (2 + eps) k^2 n - k^2 n = eps k^2 n + k^2 n
//   > f(n, n) + 0.36 n log n / log log n.
std::vector<ChainRow> chain_report(std::uint64_t n, const FValueFn& f = exact_f);

struct BoundsRow {
  std::uint64_t n = 0;
  std::uint64_t f_nn = 0;
  double lower_env = 0.0;  // (2 / sqrt(e)) n sqrt(log n / log log n)
  double upper_env = 0.0;  // 2 n sqrt(log n)
  double ratio_lower = 0.0;
  double ratio_upper = 0.0;
};

double lower_envelope(std::uint64_t n);
double upper_envelope(std::uint64_t n);

// Rows follow the order of n_list. Each n must be >= 3.
std::vector<BoundsRow> bounds_ratios(const std::vector<std::uint64_t>& n_list,
                                     const FValueFn& f = exact_f, unsigned jobs = 1);

std::string to_string(const Rational& r);

}  // namespace iml
