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

// Incremental maximum matching between divisors 1..n and the integers of a
// growing interval (m, m + L].
//
// Each extend_one() admits t = m + L + 1 and runs a single augmenting-path
// search rooted at t. This keeps the matching maximum: before the step the
// matching was maximum, so no augmenting path avoided t; after the step any
// augmenting path must therefore end at t, and the search rooted there finds
// one if it exists.
//
// Adjacency is never stored as an edge list of divisors. A ring of n + 1
// buckets holds, for each divisor i, the next multiple of i still to come;
// admitting t pops its bucket, which is exactly {i <= n : i | t}. Divisor
// lists of admitted integers are kept (ascending) for the alternating-path
// searches. Memory is O(n + L log n).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "iml/core_model.hpp"

namespace iml {

class MatchingState {
 public:
  MatchingState(std::uint64_t n, std::uint64_t m);

  std::uint64_t n() const { return n_; }
  std::uint64_t m() const { return m_; }
  std::uint64_t current_length() const { return length_; }
  std::uint64_t matching_size() const { return size_; }
  bool perfect() const { return size_ == n_; }

  // Admits the next integer and augments once. Returns true if the matching
  // grew.
  bool extend_one();

  std::optional<std::uint64_t> integer_of(std::uint64_t divisor) const;
  std::optional<std::uint64_t> divisor_of(std::uint64_t t) const;

  // Divisors of t that are <= n, ascending. t must be in the current
  // interval.
  std::span<const std::uint32_t> divisors_of(std::uint64_t t) const;

  // Alternating-path violator set from the unmatched divisors. Throws
  // std::logic_error when the matching is perfect.
  HallCertificate hall_certificate() const;

  // Requires a perfect matching.
  Witness witness() const;

  // Divisor -> integer image (0 where unmatched).
  std::vector<std::uint64_t> assignment() const;

 private:
  bool augment_from(std::uint32_t slot);

  std::uint64_t n_;
  std::uint64_t m_;
  std::uint64_t length_ = 0;
  std::uint64_t size_ = 0;

  // Slots are 1-based offsets: slot s stands for t = m + s. 0 means none.
  std::vector<std::uint32_t> slot_of_divisor_;   // index: divisor
  std::vector<std::uint32_t> divisor_of_slot_;   // index: slot
  std::vector<std::uint64_t> adjacency_start_;   // index: slot, size length + 2
  std::vector<std::uint32_t> adjacency_;

  std::vector<std::vector<std::uint32_t>> pending_;  // ring of n + 1 buckets

  std::vector<std::uint64_t> visit_mark_;  // index: divisor
  std::uint64_t epoch_ = 0;

  struct Frame {
    std::uint32_t slot;
    std::uint64_t next;
  };
  std::vector<Frame> stack_;
};

// Violator set for the graph on (m, m + length] given a maximum matching of
// it, expressed as divisor -> matched integer (0 where unmatched). The
// result is re-verified by direct recount; std::logic_error is thrown if the
// matching is perfect or turns out not to be maximum.
HallCertificate hall_certificate_from(std::uint64_t n, std::uint64_t m, std::uint64_t length,
                                      const std::vector<std::uint64_t>& integer_of_divisor);

}  // namespace iml
