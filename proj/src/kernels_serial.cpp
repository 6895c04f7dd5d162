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

#include <algorithm>
#include <bit>
#include <thread>

#include "gapkit/kernels.hpp"
#include "kernels_detail.hpp"

namespace gapkit {

BitVector::BitVector(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  if (value && (size & 63)) words_.back() &= (std::uint64_t{1} << (size & 63)) - 1;
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

namespace kernels {

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace detail {

std::uint64_t sieve_odd_words(std::span<const std::uint32_t> base, std::uint64_t lo,
                              std::uint64_t hi, std::vector<std::uint64_t>& words,
                              std::uint64_t& bits) {
  const std::uint64_t first_odd = lo | 1;
  bits = hi > first_odd ? (hi - first_odd + 1) / 2 : 0;
  words.assign((bits + 63) / 64, ~std::uint64_t{0});
  if (bits & 63) words.back() &= (std::uint64_t{1} << (bits & 63)) - 1;
  for (const std::uint32_t p32 : base) {
    const std::uint64_t p = p32;
    if (p == 2) continue;
    if (p * p >= hi) break;
    std::uint64_t m = std::max(p * p, (first_odd + p - 1) / p * p);
    if ((m & 1) == 0) m += p;
    for (std::uint64_t j = (m - first_odd) / 2; j < bits; j += p)
      words[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
  }
  // 1 is not prime.
  if (first_odd == 1 && bits > 0) words[0] &= ~std::uint64_t{1};
  return first_odd;
}

std::uint64_t count_segment(std::span<const std::uint32_t> base, std::uint64_t lo,
                            std::uint64_t hi, std::vector<std::uint64_t>& scratch) {
  std::uint64_t bits = 0;
  sieve_odd_words(base, lo, hi, scratch, bits);
  std::uint64_t n = (lo <= 2 && 2 < hi) ? 1 : 0;
  for (auto w : scratch) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

std::uint64_t count_smooth_segment(std::span<const std::uint32_t> base, std::uint64_t lo,
                                   std::uint64_t hi, std::uint64_t z,
                                   std::vector<std::uint64_t>& scratch) {
  largest_factor_segment(base, lo, hi, scratch);
  std::uint64_t n = 0;
  for (std::uint64_t i = 0; i < scratch.size(); ++i) {
    const std::uint64_t v = lo + i;
    if (v == 0) continue;
    if (v == 1 || scratch[i] <= z) ++n;
  }
  return n;
}

void sift_block(std::uint64_t lo, std::uint64_t block_lo, std::uint64_t block_hi,
                std::span<const ResidueClass> classes, std::span<std::uint64_t> words) {
  for (const auto& rc : classes) {
    const std::uint64_t p = rc.p;
    const std::uint64_t first = block_lo + (rc.c % p + p - block_lo % p) % p;
    for (std::uint64_t t = first; t < block_hi; t += p) {
      const std::uint64_t i = t - lo;
      words[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }
}

}  // namespace detail

void sieve_segment(std::span<const std::uint32_t> base, std::uint64_t lo, std::uint64_t hi,
                   std::vector<std::uint64_t>& out) {
  if (hi <= lo) return;
  if (lo <= 2 && 2 < hi) out.push_back(2);
  std::vector<std::uint64_t> words;
  std::uint64_t bits = 0;
  const std::uint64_t first_odd = detail::sieve_odd_words(base, lo, hi, words, bits);
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t b = words[w];
    while (b) {
      const auto i = (static_cast<std::uint64_t>(w) << 6) + static_cast<std::uint64_t>(std::countr_zero(b));
      out.push_back(first_odd + 2 * i);
      b &= b - 1;
    }
  }
}

void largest_factor_segment(std::span<const std::uint32_t> base, std::uint64_t lo,
                            std::uint64_t hi, std::vector<std::uint64_t>& out) {
  const std::uint64_t len = hi > lo ? hi - lo : 0;
  std::vector<std::uint64_t> rem(len);
  out.assign(len, 1);
  for (std::uint64_t i = 0; i < len; ++i) rem[i] = lo + i;
  if (lo == 0 && len > 0) out[0] = 0;
  for (const std::uint32_t p32 : base) {
    const std::uint64_t p = p32;
    if (p * p >= hi) break;
    std::uint64_t m = (lo + p - 1) / p * p;
    if (m == 0) m = p;
    for (; m < hi; m += p) {
      const std::uint64_t i = m - lo;
      do {
        rem[i] /= p;
      } while (rem[i] % p == 0);
      out[i] = p;
    }
  }
  for (std::uint64_t i = 0; i < len; ++i)
    if (rem[i] > 1) out[i] = std::max(out[i], rem[i]);
}

namespace serial {

std::vector<std::uint64_t> primes_in(std::span<const std::uint32_t> base, std::uint64_t lo,
                                     std::uint64_t hi, std::uint64_t segment_size) {
  std::vector<std::uint64_t> out;
  const std::uint64_t span = 2 * segment_size;
  for (std::uint64_t s = lo; s < hi; s += span) sieve_segment(base, s, std::min(hi, s + span), out);
  return out;
}

std::uint64_t count_primes(std::span<const std::uint32_t> base, std::uint64_t lo,
                           std::uint64_t hi, std::uint64_t segment_size) {
  std::vector<std::uint64_t> scratch;
  std::uint64_t n = 0;
  const std::uint64_t span = 2 * segment_size;
  for (std::uint64_t s = lo; s < hi; s += span)
    n += detail::count_segment(base, s, std::min(hi, s + span), scratch);
  return n;
}

std::uint64_t count_smooth(std::span<const std::uint32_t> base, std::uint64_t lo,
                           std::uint64_t hi, std::uint64_t z, std::uint64_t segment_size) {
  std::vector<std::uint64_t> scratch;
  std::uint64_t n = 0;
  for (std::uint64_t s = lo; s < hi; s += segment_size)
    n += detail::count_smooth_segment(base, s, std::min(hi, s + segment_size), z, scratch);
  return n;
}

BitVector sift(std::uint64_t lo, std::uint64_t hi, std::span<const ResidueClass> classes) {
  BitVector bits(hi > lo ? hi - lo : 0, true);
  if (hi > lo) detail::sift_block(lo, lo, hi, classes, bits.words());
  return bits;
}

}  // namespace serial
}  // namespace kernels
}  // namespace gapkit
