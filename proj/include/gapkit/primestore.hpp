// Copyright 2026 The gapkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gapkit/kernels.hpp"

namespace gapkit {

/// The half-open-left interval (lo, hi].
struct Interval {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool empty() const noexcept { return hi <= lo; }
  bool contains(std::uint64_t n) const noexcept { return lo < n && n <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct StoreOptions {
  std::size_t memory_budget_bytes = std::size_t{1} << 30;
  /// Worker cap for segment sieving; <= 0 means hardware concurrency.
  int threads = 0;
};

/// Segmented sieve of Eratosthenes over [2, limit]. Holds only the base
/// primes up to sqrt(limit); every query sieves its own segments, one bit per
/// odd number. Immutable after build() and safe for concurrent queries.
class PrimeStore {
 public:
  static PrimeStore build(std::uint64_t limit, std::uint64_t segment_size = std::uint64_t{1} << 18,
                          StoreOptions options = {});

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t segment_size() const noexcept { return segment_size_; }
  std::span<const std::uint32_t> base_primes() const noexcept { return base_; }
  int threads() const noexcept { return threads_; }

  std::vector<std::uint64_t> primes_in(Interval range) const;
  std::vector<std::uint64_t> primes_in_ap(Interval range, std::uint64_t residue,
                                          std::uint64_t modulus) const;
  /// pi(bound).
  std::uint64_t count_primes(std::uint64_t bound) const;
  std::uint64_t count_primes(Interval range) const;
  /// Number of z-smooth integers in the range, from per-segment
  /// largest-prime-factor tables.
  std::uint64_t count_smooth(Interval range, std::uint64_t z) const;
  bool is_prime(std::uint64_t n) const;

  /// Visits primes of `range` in ascending order. Segments are sieved in
  /// parallel blocks and handed to `fn` sequentially.
  template <class Fn>
  void for_each_prime(Interval range, Fn&& fn) const {
    check_range(range);
    if (range.empty()) return;
    const std::uint64_t block = 2 * segment_size_ * 8 * static_cast<std::uint64_t>(worker_count());
    for (std::uint64_t s = range.lo + 1; s <= range.hi; s += block) {
      const std::uint64_t e = (range.hi + 1 - s > block) ? s + block : range.hi + 1;
      for (const std::uint64_t p : sieve_block(s, e)) fn(p);
    }
  }

 private:
  PrimeStore() = default;
  void check_range(Interval range) const;
  int worker_count() const noexcept;
  std::vector<std::uint64_t> sieve_block(std::uint64_t lo, std::uint64_t hi) const;

  std::uint64_t limit_ = 0;
  std::uint64_t segment_size_ = 0;
  int threads_ = 0;
  std::vector<std::uint32_t> base_;
};

/// Maximal prime dividing n, by trial division. n >= 2.
std::uint64_t largest_prime_factor(std::uint64_t n);

/// True iff every prime factor of n is <= bound; is_smooth(1, b) is true.
bool is_smooth(std::uint64_t n, std::uint64_t bound);

}  // namespace gapkit
