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

// Erdos-Rankin style sifting of (x, y] down to a prescribed prime set H, CRT
// assembly of the chosen classes, and search for a shift n that realizes the
// corridor P cap (n + x, n + y] within n + H.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gapkit/admissible.hpp"
#include "gapkit/kernels.hpp"
#include "gapkit/primality.hpp"
#include "gapkit/primestore.hpp"

namespace gapkit {

enum class Profile { paper, toy };
enum class Strategy { greedy, random };

std::string_view to_string(Profile p);
std::string_view to_string(Strategy s);
Profile parse_profile(std::string_view text);
Strategy parse_strategy(std::string_view text);

/// Toy-profile knobs. Leaving z/s_lo unset keeps the S-stage empty; leaving
/// p_lo unset keeps the P-stage empty, so every prime <= x takes the zero
/// class.
struct ParamOverrides {
  std::optional<std::uint64_t> y;
  std::optional<std::uint64_t> z;
  std::optional<std::uint64_t> s_lo;
  std::optional<std::uint64_t> p_lo;
};

struct Params {
  Profile profile = Profile::toy;
  std::uint64_t x = 0;
  long double c_const = 1.0L;
  std::uint64_t y = 0;
  std::uint64_t z = 0;
  Interval s_range;  // random or greedy stage
  Interval p_range;  // greedy stage, inside (x/2, x]
  Interval q_range;  // (x, y]
  std::vector<std::string> warnings;
};

/// paper: y = c x log x log3 x / log2 x, z = x^(log3 x / (4 log2 x)),
/// S = ((log x)^20, z], P = (x/2, x]. Needs log3 x > 0; warns when
/// log3 x < 1 or when S comes out empty.
/// toy: y from the override (or the default formula when that exceeds x);
/// stage ranges from overrides only.
Params plan_parameters(std::uint64_t x, long double c_const, Profile profile,
                       const ParamOverrides& overrides = {});

/// Survivors of (x, y] under the classes chosen so far. Bit t - (x + 1).
struct SiftState {
  Interval interval;
  BitVector survivors;
  std::vector<ResidueClass> classes;

  explicit SiftState(Interval range);
  bool survives(std::uint64_t t) const { return survivors.test(t - interval.lo - 1); }
  std::vector<std::uint64_t> survivor_list() const;
};

/// Class 0 when it avoids H, else the allowed class killing the most
/// survivors. For H inside (x, y] and p <= x the zero class is always allowed.
SiftState sift_small_stage(SiftState state, std::span<const std::uint64_t> primes, const Tuple& h);
/// Allowed class killing the most survivors; ties go to the smallest residue.
SiftState sift_greedy_stage(SiftState state, std::span<const std::uint64_t> primes, const Tuple& h);
/// Class drawn uniformly from Omega_H(s) with a mt19937_64 seeded once per
/// stage; replayable from (seed, prime order).
SiftState sift_random_stage(SiftState state, std::span<const std::uint64_t> primes, const Tuple& h,
                            std::uint64_t seed);

struct CoverCertificate {
  Profile profile = Profile::toy;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  Tuple h;
  std::vector<ResidueClass> classes;
  RepulsiveSet excluded;
  std::uint64_t c_upper = 0;  // largest modulus allowed (C * x)
  Strategy strategy = Strategy::greedy;
  std::uint64_t seed = 0;

  friend bool operator==(const CoverCertificate& a, const CoverCertificate& b) {
    return a.profile == b.profile && a.x == b.x && a.y == b.y && a.h == b.h && a.classes == b.classes &&
           a.excluded.primes == b.excluded.primes && a.c_upper == b.c_upper && a.strategy == b.strategy &&
           a.seed == b.seed;
  }
};

struct CoverMeta {
  Profile profile = Profile::toy;
  Strategy strategy = Strategy::greedy;
  std::uint64_t seed = 0;
  std::uint64_t c_upper = 0;
};

/// Kills the remaining survivors outside H with fresh moduli: for each
/// surviving t (ascending) take the smallest unused completion prime p with
/// p != t and p not dividing t - q for any q in H, and set c_p = t mod p.
/// Capacity error when the primes run out; admissibility error for a
/// non-admissible H.
CoverCertificate complete_cover(SiftState state, const Tuple& h,
                                std::span<const std::uint64_t> completion_primes,
                                const RepulsiveSet& excluded, const CoverMeta& meta);

struct CoverOptions {
  Strategy strategy = Strategy::greedy;
  std::uint64_t seed = 0;
  RepulsiveSet excluded;
  /// C doubles from 2 until the completion succeeds or C exceeds this cap.
  std::uint64_t c_cap = 64;
};

/// The whole pipeline: zero-class stage for primes <= x outside S and P,
/// S-stage (greedy or random), greedy P-stage, then completion with C = 2, 4,
/// ... . `store` must reach max(y, c_cap * x).
CoverCertificate build_cover(const PrimeStore& store, const Params& params, const Tuple& h,
                             const CoverOptions& options = {});

/// Recomputes (x, y] minus every class from scratch.
std::vector<std::uint64_t> survivors(const CoverCertificate& cert, int threads = 0);

struct CertificateCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Survivor exactness, H-avoidance, distinct moduli, moduli outside the
/// excluded set and <= c_upper.
CertificateCheck verify_certificate(const CoverCertificate& cert, int threads = 0);

struct CrtResult {
  mpz_class W;
  mpz_class b;
};

/// W = product of the moduli; b in [0, W) with b = -c_p (mod p) for each class.
CrtResult assemble_crt(const CoverCertificate& cert);

struct PrimeOffset {
  std::uint64_t q = 0;
  Verdict verdict = Verdict::composite;
};

struct CompositeOffset {
  std::uint64_t t = 0;
  std::uint64_t p = 0;  // a modulus of the certificate dividing n + t
};

struct CorridorWitness {
  mpz_class W;
  mpz_class b;
  std::uint64_t k = 0;
  mpz_class n;  // b + k W
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  unsigned mr_rounds = kDefaultRounds;
  std::uint64_t seed = 0;
  std::vector<PrimeOffset> prime_offsets;
  std::vector<CompositeOffset> composite_offsets;
};

/// Smallest k in [k_min, k_max] with n = b + kW, n + x > c_upper, and every
/// n + q (q in H) not composite. Empty when the range is exhausted.
std::optional<CorridorWitness> find_corridor(const CoverCertificate& cert, std::uint64_t k_min,
                                             std::uint64_t k_max, unsigned mr_rounds = kDefaultRounds,
                                             std::uint64_t seed = 0);

struct CorridorCheck {
  bool ok = true;
  std::vector<std::string> problems;
  std::optional<std::uint64_t> offending_t;
};

/// Independent re-check: every recorded p divides n + t with n + t > p and p
/// a certificate modulus, every t in (x, y] outside H is covered, and each
/// n + q is re-tested for primality.
CorridorCheck verify_corridor(const CorridorWitness& witness, const CoverCertificate& cert);

}  // namespace gapkit
