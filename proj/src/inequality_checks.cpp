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

#include "iml/inequality_checks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iml/parallel.hpp"

namespace iml {

namespace {

void require_log_domain(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3 so that log log n > 0");
}

double log_ratio(std::uint64_t n) {
  const double log_n = std::log(static_cast<double>(n));
  return log_n / std::log(log_n);
}

Rational as_rational(std::uint64_t v) { return Rational(static_cast<std::int64_t>(v)); }

}  // namespace

TheoremParameters theorem_parameters(std::uint64_t n) {
  require_log_domain(n);
  const double raw = 0.6 * std::sqrt(log_ratio(n));
  const auto k = static_cast<std::uint64_t>(std::ceil(raw));
  return TheoremParameters{n, std::max<std::uint64_t>(k, 1), kEpsilon};
}

Lemma1Sides lemma1_sides(std::uint64_t k, std::uint64_t n, const FValueFn& f) {
  if (k < 1 || n < 1) throw std::invalid_argument("k and n must be positive");
  Lemma1Sides sides{k, n, 0, 0};
  sides.lhs = k * n + f(k * n, k * n);
  sides.rhs = k * k * n + f(n, k * k * n);
  return sides;
}

Witness compose_witness(std::uint64_t k, std::uint64_t n, std::uint64_t inner_length,
                        const Witness& inner) {
  if (k < 1 || n < 1) throw std::invalid_argument("k and n must be positive");
  const auto verdict = verify_witness(n, k * k * n, inner_length, inner);
  if (!verdict) throw std::invalid_argument("inner witness rejected: " + verdict.message);
  Witness out;
  out.assignment.resize(k * n);
  for (std::uint64_t i = 1; i <= n; ++i) out.assignment[i - 1] = inner.at(i);
  for (std::uint64_t i = n + 1; i <= k * n; ++i) out.assignment[i - 1] = k * i;
  return out;
}

std::vector<Lemma1Row> lemma1_grid(std::uint64_t n_max, std::uint64_t k_max, const FValueFn& f,
                                   unsigned jobs) {
  if (n_max < 1 || k_max < 1) throw std::invalid_argument("n_max and k_max must be positive");
  return parallel_map(n_max * k_max, jobs, [&](std::size_t index) {
    const std::uint64_t n = index / k_max + 1;
    const std::uint64_t k = index % k_max + 1;
    const SolveResult inner = solve_f(n, k * k * n);
    Lemma1Row row;
    row.sides = Lemma1Sides{k, n, k * n + f(k * n, k * n), k * k * n + inner.f_value};
    row.composed_length = k * k * n - k * n + inner.f_value;
    const Witness composed = compose_witness(k, n, inner.f_value, inner.witness);
    row.composed_valid = verify_witness(k * n, k * n, row.composed_length, composed).ok;
    return row;
  });
}

Eq2Result eq2_predicate(std::uint64_t n, const FValueFn& f) {
  const auto params = theorem_parameters(n);
  const std::uint64_t kn = params.k * n;
  Eq2Result out;
  out.lhs = f(kn, kn);
  out.rhs = (Rational(2) + params.epsilon) * as_rational(params.k * params.k * n);
  out.holds = as_rational(out.lhs) > out.rhs;
  return out;
}

Eq3Result eq3_predicate(std::uint64_t n, const FValueFn& f) {
  const auto params = theorem_parameters(n);
  Eq3Result out;
  out.lhs = params.epsilon * as_rational(params.k * params.k * n);
  out.rhs = f(n, n);
  out.holds = out.lhs > as_rational(out.rhs);
  return out;
}

Quantity Quantity::of(Rational r) { return Quantity{r, 0.0, true}; }

Quantity Quantity::irrational(double v) { return Quantity{Rational(0), v, false}; }

double Quantity::value() const {
  if (!is_exact) return approx;
  return static_cast<double>(exact.numerator()) / static_cast<double>(exact.denominator());
}

double gap_term(std::uint64_t n) {
  require_log_domain(n);
  return 0.36 * static_cast<double>(n) * log_ratio(n);
}

std::vector<ChainRow> chain_report(std::uint64_t n, const FValueFn& f) {
  const auto params = theorem_parameters(n);
  const std::uint64_t k = params.k;
  const Rational kn = as_rational(k * n);
  const Rational k2n = as_rational(k * k * n);
  const Rational f_far = as_rational(f(n, k * k * n));
  const Rational f_kn = as_rational(f(k * n, k * n));
  const Rational f_nn = as_rational(f(n, n));
  const Rational eps = params.epsilon;

  const Rational shifted = kn + f_kn - k2n;
  const Rational scaled = (Rational(2) + eps) * k2n - k2n;
  const Rational split = eps * k2n + k2n;
  const double tail = boost::rational_cast<double>(f_nn) + gap_term(n);

  std::vector<ChainRow> rows;
  rows.push_back({"max_m f(n,m) >= f(n,k^2n)", Quantity::of(f_far), Quantity::of(f_far), true,
                  true});
  rows.push_back({"f(n,k^2n) >= kn + f(kn,kn) - k^2n", Quantity::of(f_far),
                  Quantity::of(shifted), f_far >= shifted, false});
  rows.push_back({"kn + f(kn,kn) - k^2n > (2+eps)k^2n - k^2n", Quantity::of(shifted),
                  Quantity::of(scaled), shifted > scaled, false});
  rows.push_back({"(2+eps)k^2n - k^2n = eps k^2n + k^2n", Quantity::of(scaled),
                  Quantity::of(split), scaled == split, false});
  const long double split_value =
      static_cast<long double>(split.numerator()) / static_cast<long double>(split.denominator());
  rows.push_back({"eps k^2n + k^2n > f(n,n) + 0.36 n log n / log log n", Quantity::of(split),
                  Quantity::irrational(tail), split_value > static_cast<long double>(tail),
                  false});
  return rows;
}

double lower_envelope(std::uint64_t n) {
  require_log_domain(n);
  return 2.0 / std::sqrt(std::exp(1.0)) * static_cast<double>(n) * std::sqrt(log_ratio(n));
}

double upper_envelope(std::uint64_t n) {
  require_log_domain(n);
  return 2.0 * static_cast<double>(n) * std::sqrt(std::log(static_cast<double>(n)));
}

std::vector<BoundsRow> bounds_ratios(const std::vector<std::uint64_t>& n_list, const FValueFn& f,
                                     unsigned jobs) {
  for (std::uint64_t n : n_list) require_log_domain(n);
  return parallel_map(n_list.size(), jobs, [&](std::size_t index) {
    const std::uint64_t n = n_list[index];
    BoundsRow row;
    row.n = n;
    row.f_nn = f(n, n);
    row.lower_env = lower_envelope(n);
    row.upper_env = upper_envelope(n);
    row.ratio_lower = static_cast<double>(row.f_nn) / row.lower_env;
    row.ratio_upper = static_cast<double>(row.f_nn) / row.upper_env;
    return row;
  });
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace iml
