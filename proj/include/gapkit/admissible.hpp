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

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gapkit {

/// A finite set of integers, stored strictly ascending.
class Tuple {
 public:
  Tuple() = default;
  /// Sorts; duplicate elements are an argument error.
  explicit Tuple(std::vector<std::int64_t> elements);
  Tuple(std::initializer_list<std::int64_t> elements) : Tuple(std::vector<std::int64_t>(elements)) {}

  std::span<const std::int64_t> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(std::int64_t v) const;
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const Tuple&, const Tuple&) = default;

 private:
  std::vector<std::int64_t> elements_;
};

/// { e mod p : e in t }, ascending.
std::vector<std::uint64_t> residues_mod(const Tuple& t, std::uint64_t p);

/// True iff t misses a residue class modulo every prime. Only p <= |t| needs
/// checking: |t| residues cannot cover the p classes of a larger prime.
bool is_admissible(const Tuple& t);

/// #Omega_H(s): residues mod s left free by h.
std::uint64_t omega_H(std::uint64_t s, const Tuple& h);

/// prod (1 - 1/s), factors multiplied pairwise from the smallest up.
long double sigma(std::span<const std::uint64_t> s_set);
/// prod (1 - 1/#Omega_H(s)). Degenerate error when some Omega_H(s) is empty.
long double sigma_H(std::span<const std::uint64_t> s_set, const Tuple& h);

/// Exact rational forms, for at most 64 factors.
mpq_class sigma_exact(std::span<const std::uint64_t> s_set);
mpq_class sigma_H_exact(std::span<const std::uint64_t> s_set, const Tuple& h);

/// A prime set excluded from sieving. `witness_constant` is the implied
/// constant c' of the tail-sum condition sum_{p >= p'} 1/p <= c'/p'.
struct RepulsiveSet {
  std::vector<std::uint64_t> primes;
  long double witness_constant = 1.0L;

  bool contains(std::uint64_t p) const;
};

struct RepulsiveReport {
  bool repulsive = true;
  /// c'/p' - tail(p') per member, in the order of the input.
  std::vector<long double> margins;
  long double tightest_margin = 0;
  std::uint64_t tightest_prime = 0;  // 0 for the empty set
};

RepulsiveReport check_repulsive(std::span<const std::uint64_t> z, long double witness_constant = 1.0L);

}  // namespace gapkit
