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

#include "iml/matching_engine.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace iml {

MatchingState::MatchingState(std::uint64_t n, std::uint64_t m)
    : n_(n),
      m_(m),
      slot_of_divisor_(n + 1, 0),
      divisor_of_slot_(1, 0),
      adjacency_start_{0, 0},
      pending_(n + 1),
      visit_mark_(n + 1, 0) {
  validate_instance(n, m);
  // First multiple of i above m sits at offset i - m mod i, in [1, i].
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t offset = i - m % i;
    pending_[offset % (n + 1)].push_back(static_cast<std::uint32_t>(i));
  }
}

bool MatchingState::extend_one() {
  if (length_ >= n_ * n_ + n_) throw std::logic_error("interval grew past n^2 + n");
  const std::uint64_t slot = ++length_;
  auto& bucket = pending_[slot % (n_ + 1)];
  std::sort(bucket.begin(), bucket.end());
  adjacency_.insert(adjacency_.end(), bucket.begin(), bucket.end());
  adjacency_start_.push_back(adjacency_.size());
  divisor_of_slot_.push_back(0);

  std::vector<std::uint32_t> moved;
  moved.swap(bucket);
  for (std::uint32_t i : moved) pending_[(slot + i) % (n_ + 1)].push_back(i);

  if (size_ == n_) return false;
  if (augment_from(static_cast<std::uint32_t>(slot))) {
    ++size_;
    return true;
  }
  return false;
}

bool MatchingState::augment_from(std::uint32_t root) {
  ++epoch_;
  stack_.clear();
  stack_.push_back(Frame{root, adjacency_start_[root]});
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.next == adjacency_start_[top.slot + 1]) {
      stack_.pop_back();
      continue;
    }
    const std::uint32_t divisor = adjacency_[top.next++];
    if (visit_mark_[divisor] == epoch_) continue;
    visit_mark_[divisor] = epoch_;
    const std::uint32_t held = slot_of_divisor_[divisor];
    if (held != 0) {
      stack_.push_back(Frame{held, adjacency_start_[held]});
      continue;
    }
    // Free divisor reached: each slot on the stack takes the divisor it was
    // exploring.
    for (const Frame& frame : stack_) {
      const std::uint32_t d = adjacency_[frame.next - 1];
      divisor_of_slot_[frame.slot] = d;
      slot_of_divisor_[d] = frame.slot;
    }
    return true;
  }
  return false;
}

std::optional<std::uint64_t> MatchingState::integer_of(std::uint64_t divisor) const {
  if (divisor < 1 || divisor > n_) throw std::out_of_range("divisor outside [1, n]");
  const std::uint32_t slot = slot_of_divisor_[divisor];
  if (slot == 0) return std::nullopt;
  return m_ + slot;
}

std::optional<std::uint64_t> MatchingState::divisor_of(std::uint64_t t) const {
  if (t <= m_ || t - m_ > length_) throw std::out_of_range("integer outside the interval");
  const std::uint32_t d = divisor_of_slot_[t - m_];
  if (d == 0) return std::nullopt;
  return d;
}

std::span<const std::uint32_t> MatchingState::divisors_of(std::uint64_t t) const {
  if (t <= m_ || t - m_ > length_) throw std::out_of_range("integer outside the interval");
  const std::uint64_t slot = t - m_;
  return std::span<const std::uint32_t>(adjacency_.data() + adjacency_start_[slot],
                                        adjacency_start_[slot + 1] - adjacency_start_[slot]);
}

std::vector<std::uint64_t> MatchingState::assignment() const {
  std::vector<std::uint64_t> out(n_, 0);
  for (std::uint64_t i = 1; i <= n_; ++i) {
    if (slot_of_divisor_[i] != 0) out[i - 1] = m_ + slot_of_divisor_[i];
  }
  return out;
}

Witness MatchingState::witness() const {
  if (!perfect()) throw std::logic_error("witness requires a perfect matching");
  return Witness{assignment()};
}

HallCertificate MatchingState::hall_certificate() const {
  if (perfect()) throw std::logic_error("hall_certificate requires a non-perfect matching");
  return hall_certificate_from(n_, m_, length_, assignment());
}

HallCertificate hall_certificate_from(std::uint64_t n, std::uint64_t m, std::uint64_t length,
                                      const std::vector<std::uint64_t>& integer_of_divisor) {
  if (integer_of_divisor.size() != n) throw std::invalid_argument("matching has wrong size");
  std::vector<std::uint64_t> divisor_at(length + 1, 0);  // index: offset
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t t = integer_of_divisor[i - 1];
    if (t == 0) continue;
    if (t <= m || t - m > length || t % i != 0) {
      throw std::invalid_argument("matching uses an edge outside the graph");
    }
    divisor_at[t - m] = i;
  }

  std::vector<bool> in_set(n + 1, false);
  std::vector<bool> reached(length + 1, false);
  std::deque<std::uint64_t> queue;
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (integer_of_divisor[i - 1] == 0) {
      in_set[i] = true;
      queue.push_back(i);
    }
  }
  if (queue.empty()) throw std::logic_error("matching is perfect; no violator set exists");

  std::uint64_t neighborhood = 0;
  while (!queue.empty()) {
    const std::uint64_t i = queue.front();
    queue.pop_front();
    for (std::uint64_t offset = i - m % i; offset <= length; offset += i) {
      if (reached[offset]) continue;
      reached[offset] = true;
      ++neighborhood;
      const std::uint64_t mate = divisor_at[offset];
      if (mate == 0) throw std::logic_error("augmenting path found; matching was not maximum");
      if (!in_set[mate]) {
        in_set[mate] = true;
        queue.push_back(mate);
      }
    }
  }

  HallCertificate cert;
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (in_set[i]) cert.violator_set.push_back(i);
  }
  cert.neighborhood_size = neighborhood;
  if (!certificate_holds(n, m, length, cert)) {
    throw std::logic_error("violator set failed its recount");
  }
  return cert;
}

}  // namespace iml
