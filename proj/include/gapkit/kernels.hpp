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

// Data-parallel inner loops. Every kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::omp` with the same
// signature plus a thread cap; the two must produce identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gapkit {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  std::size_t count() const noexcept;

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Calls fn(i) for each set bit, ascending.
  template <class Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const std::size_t i = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(bits));
        fn(i);
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A residue class c (mod p).
struct ResidueClass {
  std::uint64_t p = 0;
  std::uint64_t c = 0;
  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

namespace kernels {

/// Primes of [lo, hi) from one odd-only bit-packed segment. `base` must hold
/// every prime <= sqrt(hi - 1), ascending. Appends to `out`.
void sieve_segment(std::span<const std::uint32_t> base, std::uint64_t lo, std::uint64_t hi,
                   std::vector<std::uint64_t>& out);

/// Largest prime factor of every n in [lo, hi) (0 for n = 0, 1 for n = 1),
/// built by dividing out each base prime with multiplicity.
void largest_factor_segment(std::span<const std::uint32_t> base, std::uint64_t lo,
                            std::uint64_t hi, std::vector<std::uint64_t>& out);

namespace serial {

std::vector<std::uint64_t> primes_in(std::span<const std::uint32_t> base, std::uint64_t lo,
                                     std::uint64_t hi, std::uint64_t segment_size);
std::uint64_t count_primes(std::span<const std::uint32_t> base, std::uint64_t lo,
                           std::uint64_t hi, std::uint64_t segment_size);
std::uint64_t count_smooth(std::span<const std::uint32_t> base, std::uint64_t lo,
                           std::uint64_t hi, std::uint64_t z, std::uint64_t segment_size);
/// Bit t - lo is set iff t in [lo, hi) avoids every class.
BitVector sift(std::uint64_t lo, std::uint64_t hi, std::span<const ResidueClass> classes);

}  // namespace serial

namespace omp {

std::vector<std::uint64_t> primes_in(std::span<const std::uint32_t> base, std::uint64_t lo,
                                     std::uint64_t hi, std::uint64_t segment_size, int threads);
std::uint64_t count_primes(std::span<const std::uint32_t> base, std::uint64_t lo,
                           std::uint64_t hi, std::uint64_t segment_size, int threads);
std::uint64_t count_smooth(std::span<const std::uint32_t> base, std::uint64_t lo,
                           std::uint64_t hi, std::uint64_t z, std::uint64_t segment_size,
                           int threads);
BitVector sift(std::uint64_t lo, std::uint64_t hi, std::span<const ResidueClass> classes,
               int threads);

}  // namespace omp

/// Worker count used when a caller passes threads <= 0.
int default_threads();

}  // namespace kernels
}  // namespace gapkit
