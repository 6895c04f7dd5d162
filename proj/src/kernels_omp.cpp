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

#include <omp.h>

#include <algorithm>

#include "gapkit/kernels.hpp"
#include "kernels_detail.hpp"

namespace gapkit::kernels::omp {

namespace {

int resolve(int threads) { return threads > 0 ? threads : default_threads(); }

}  // namespace

std::vector<std::uint64_t> primes_in(std::span<const std::uint32_t> base, std::uint64_t lo,
                                     std::uint64_t hi, std::uint64_t segment_size, int threads) {
  const std::uint64_t span = 2 * segment_size;
  const auto segments = static_cast<std::int64_t>(detail::segment_count(lo, hi, span));
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(segments));
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve(threads))
  for (std::int64_t k = 0; k < segments; ++k) {
    const std::uint64_t s = lo + static_cast<std::uint64_t>(k) * span;
    sieve_segment(base, s, std::min(hi, s + span), parts[static_cast<std::size_t>(k)]);
  }
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  std::vector<std::uint64_t> out;
  out.reserve(total);
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::uint64_t count_primes(std::span<const std::uint32_t> base, std::uint64_t lo,
                           std::uint64_t hi, std::uint64_t segment_size, int threads) {
  const std::uint64_t span = 2 * segment_size;
  const auto segments = static_cast<std::int64_t>(detail::segment_count(lo, hi, span));
  std::uint64_t n = 0;
#pragma omp parallel num_threads(resolve(threads)) reduction(+ : n)
  {
    std::vector<std::uint64_t> scratch;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < segments; ++k) {
      const std::uint64_t s = lo + static_cast<std::uint64_t>(k) * span;
      n += detail::count_segment(base, s, std::min(hi, s + span), scratch);
    }
  }
  return n;
}

std::uint64_t count_smooth(std::span<const std::uint32_t> base, std::uint64_t lo,
                           std::uint64_t hi, std::uint64_t z, std::uint64_t segment_size,
                           int threads) {
  const auto segments = static_cast<std::int64_t>(detail::segment_count(lo, hi, segment_size));
  std::uint64_t n = 0;
#pragma omp parallel num_threads(resolve(threads)) reduction(+ : n)
  {
    std::vector<std::uint64_t> scratch;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < segments; ++k) {
      const std::uint64_t s = lo + static_cast<std::uint64_t>(k) * segment_size;
      n += detail::count_smooth_segment(base, s, std::min(hi, s + segment_size), z, scratch);
    }
  }
  return n;
}

BitVector sift(std::uint64_t lo, std::uint64_t hi, std::span<const ResidueClass> classes,
               int threads) {
  BitVector bits(hi > lo ? hi - lo : 0, true);
  // Blocks are word-aligned so no two threads touch the same word.
  constexpr std::uint64_t kBlock = std::uint64_t{1} << 15;
  const auto blocks = static_cast<std::int64_t>(detail::segment_count(lo, hi, kBlock));
  auto words = bits.words();
#pragma omp parallel for schedule(static) num_threads(resolve(threads))
  for (std::int64_t k = 0; k < blocks; ++k) {
    const std::uint64_t b = lo + static_cast<std::uint64_t>(k) * kBlock;
    detail::sift_block(lo, b, std::min(hi, b + kBlock), classes, words);
  }
  return bits;
}

}  // namespace gapkit::kernels::omp
