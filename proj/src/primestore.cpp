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

#include "gapkit/primestore.hpp"

#include <cmath>
#include <string>

#include "gapkit/error.hpp"

namespace gapkit {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> small_primes(std::uint64_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

constexpr std::uint64_t kMaxLimit = std::uint64_t{1} << 62;

}  // namespace

PrimeStore PrimeStore::build(std::uint64_t limit, std::uint64_t segment_size,
                             StoreOptions options) {
  if (limit < 2) fail(ErrorKind::argument, "sieve limit must be >= 2");
  if (segment_size < 64) fail(ErrorKind::argument, "segment size must be >= 64");
  const std::uint64_t root = isqrt(limit);
  const int workers = options.threads > 0 ? options.threads : kernels::default_threads();
  // base sieve bytes + base primes + per-worker segment and factor tables
  const long double estimate =
      static_cast<long double>(root) / 8.0L +
      4.0L * 1.3L * static_cast<long double>(root) / std::log(static_cast<long double>(root) + 2) +
      static_cast<long double>(workers) * 16.0L * static_cast<long double>(segment_size);
  if (limit > kMaxLimit || estimate > static_cast<long double>(options.memory_budget_bytes)) {
    fail(ErrorKind::resource, "sieve limit " + std::to_string(limit) + " exceeds the memory budget of " +
                                  std::to_string(options.memory_budget_bytes) + " bytes");
  }
  PrimeStore store;
  store.limit_ = limit;
  store.segment_size_ = segment_size;
  store.threads_ = options.threads;
  store.base_ = small_primes(root);
  return store;
}

int PrimeStore::worker_count() const noexcept {
  return threads_ > 0 ? threads_ : kernels::default_threads();
}

void PrimeStore::check_range(Interval range) const {
  if (range.hi > limit_) {
    fail(ErrorKind::out_of_range, "range end " + std::to_string(range.hi) + " exceeds sieve limit " +
                                      std::to_string(limit_));
  }
}

std::vector<std::uint64_t> PrimeStore::sieve_block(std::uint64_t lo, std::uint64_t hi) const {
  if (worker_count() == 1) return kernels::serial::primes_in(base_, lo, hi, segment_size_);
  return kernels::omp::primes_in(base_, lo, hi, segment_size_, worker_count());
}

std::vector<std::uint64_t> PrimeStore::primes_in(Interval range) const {
  check_range(range);
  if (range.empty()) return {};
  return sieve_block(range.lo + 1, range.hi + 1);
}

std::vector<std::uint64_t> PrimeStore::primes_in_ap(Interval range, std::uint64_t residue,
                                                    std::uint64_t modulus) const {
  if (modulus == 0) fail(ErrorKind::argument, "modulus must be positive");
  if (residue >= modulus) fail(ErrorKind::argument, "residue must be reduced modulo the modulus");
  std::vector<std::uint64_t> out;
  for_each_prime(range, [&](std::uint64_t p) {
    if (p % modulus == residue) out.push_back(p);
  });
  return out;
}

std::uint64_t PrimeStore::count_primes(std::uint64_t bound) const {
  return count_primes(Interval{1, bound});
}

std::uint64_t PrimeStore::count_primes(Interval range) const {
  check_range(range);
  if (range.empty()) return 0;
  if (worker_count() == 1)
    return kernels::serial::count_primes(base_, range.lo + 1, range.hi + 1, segment_size_);
  return kernels::omp::count_primes(base_, range.lo + 1, range.hi + 1, segment_size_, worker_count());
}

std::uint64_t PrimeStore::count_smooth(Interval range, std::uint64_t z) const {
  check_range(range);
  if (range.empty()) return 0;
  if (worker_count() == 1)
    return kernels::serial::count_smooth(base_, range.lo + 1, range.hi + 1, z, segment_size_);
  return kernels::omp::count_smooth(base_, range.lo + 1, range.hi + 1, z, segment_size_,
                                    worker_count());
}

bool PrimeStore::is_prime(std::uint64_t n) const {
  if (n > limit_) fail(ErrorKind::out_of_range, std::to_string(n) + " exceeds sieve limit");
  if (n < 2) return false;
  for (const std::uint64_t p : base_) {
    if (p * p > n) break;
    if (n % p == 0) return false;
  }
  return true;
}

std::uint64_t largest_prime_factor(std::uint64_t n) {
  if (n < 2) fail(ErrorKind::argument, "largest_prime_factor needs n >= 2");
  std::uint64_t largest = 1;
  for (std::uint64_t d : {2u, 3u}) {
    while (n % d == 0) {
      n /= d;
      largest = d;
    }
  }
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    for (std::uint64_t q : {d, d + 2}) {
      while (n % q == 0) {
        n /= q;
        largest = q;
      }
    }
  }
  return n > 1 ? n : largest;
}

bool is_smooth(std::uint64_t n, std::uint64_t bound) {
  if (n == 0) fail(ErrorKind::argument, "is_smooth needs n >= 1");
  // Once the trial divisor passes `bound`, whatever is left has only
  // factors above it.
  for (std::uint64_t d : {2u, 3u}) {
    if (n == 1) return true;
    if (d > bound) return false;
    while (n % d == 0) n /= d;
  }
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    for (std::uint64_t q : {d, d + 2}) {
      if (q > bound) return n == 1;
      while (n % q == 0) n /= q;
    }
  }
  // n is now 1 or a prime
  return n <= bound || n == 1;
}

}  // namespace gapkit
