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
#include <optional>
#include <string_view>

namespace gapkit {

enum class Verdict { composite, probably_prime, prime };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

struct BigIntPrimality {
  mpz_class candidate;
  unsigned rounds = 0;
  Verdict verdict = Verdict::composite;
  /// For composite verdicts: a nontrivial divisor or a Miller-Rabin base
  /// that proves compositeness. Empty for candidates 0 and 1.
  std::optional<mpz_class> witness;
};

/// Below this bound the Miller-Rabin bases 2, 3, ..., 41 (the first 13 primes)
/// decide primality exactly (Sorenson and Webster).
const mpz_class& deterministic_bound();

inline constexpr unsigned kDefaultRounds = 40;

/// Exact below deterministic_bound(); above it, `rounds` Miller-Rabin rounds
/// with bases from a mt19937_64 seeded by `seed`, so runs are replayable.
BigIntPrimality is_probable_prime(const mpz_class& n, unsigned rounds = kDefaultRounds,
                                  std::uint64_t seed = 0);

}  // namespace gapkit
