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

#include <cstdint>
#include <span>
#include <vector>

#include "gapkit/kernels.hpp"

namespace gapkit::kernels::detail {

/// Odd-only sieve of [lo, hi): bit i of `words` stands for first_odd + 2i.
/// Returns first_odd; `bits` receives the number of valid bits.
std::uint64_t sieve_odd_words(std::span<const std::uint32_t> base, std::uint64_t lo,
                              std::uint64_t hi, std::vector<std::uint64_t>& words,
                              std::uint64_t& bits);

/// Primes in [lo, hi) counted from a sieved segment.
std::uint64_t count_segment(std::span<const std::uint32_t> base, std::uint64_t lo,
                            std::uint64_t hi, std::vector<std::uint64_t>& scratch);

std::uint64_t count_smooth_segment(std::span<const std::uint32_t> base, std::uint64_t lo,
                                   std::uint64_t hi, std::uint64_t z,
                                   std::vector<std::uint64_t>& scratch);

void sift_block(std::uint64_t lo, std::uint64_t block_lo, std::uint64_t block_hi,
                std::span<const ResidueClass> classes,
                std::span<std::uint64_t> words);

inline std::uint64_t segment_count(std::uint64_t lo, std::uint64_t hi, std::uint64_t span) {
  return hi > lo ? (hi - lo + span - 1) / span : 0;
}

}  // namespace gapkit::kernels::detail
