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

#include "gapkit/primality.hpp"

#include <array>
#include <random>
#include <string>

#include "gapkit/error.hpp"

namespace gapkit {

namespace {

constexpr std::array<unsigned, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// True if `base` proves n composite. n odd, n - 1 = d * 2^s.
bool is_witness(const mpz_class& n, const mpz_class& base, const mpz_class& d, unsigned long s) {
  const mpz_class n_minus_1 = n - 1;
  mpz_class y;
  mpz_powm(y.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (y == 1 || y == n_minus_1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    mpz_powm_ui(y.get_mpz_t(), y.get_mpz_t(), 2, n.get_mpz_t());
    if (y == n_minus_1) return false;
    if (y == 1) return true;
  }
  return true;
}

// Uniform-ish value in [2, n - 2] built from 64-bit words.
mpz_class random_base(const mpz_class& n, std::mt19937_64& rng) {
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2) + 64;
  mpz_class r = 0;
  for (std::size_t have = 0; have < bits; have += 64) {
    r <<= 64;
    r += mpz_class(static_cast<unsigned long>(rng()));
  }
  const mpz_class span = n - 3;
  r %= span;
  return r + 2;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::composite: return "composite";
    case Verdict::probably_prime: return "probably-prime";
    case Verdict::prime: return "prime";
  }
  return "composite";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "composite") return Verdict::composite;
  if (text == "probably-prime") return Verdict::probably_prime;
  if (text == "prime") return Verdict::prime;
  fail(ErrorKind::argument, "unknown primality verdict '" + std::string(text) + "'");
}

const mpz_class& deterministic_bound() {
  static const mpz_class bound("3317044064679887385961981");
  return bound;
}

BigIntPrimality is_probable_prime(const mpz_class& n, unsigned rounds, std::uint64_t seed) {
  if (n < 0) fail(ErrorKind::argument, "primality test needs n >= 0");
  BigIntPrimality out{n, rounds, Verdict::composite, std::nullopt};
  if (n < 2) return out;
  for (const unsigned p : kBases) {
    if (n == p) {
      out.verdict = Verdict::prime;
      return out;
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.witness = mpz_class(p);
      return out;
    }
  }
  mpz_class d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  if (n < deterministic_bound()) {
    for (const unsigned p : kBases) {
      const mpz_class base(p);
      if (is_witness(n, base, d, s)) {
        out.witness = base;
        return out;
      }
    }
    out.verdict = Verdict::prime;
    return out;
  }
  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < rounds; ++i) {
    const mpz_class base = random_base(n, rng);
    if (is_witness(n, base, d, s)) {
      out.witness = base;
      return out;
    }
  }
  out.verdict = Verdict::probably_prime;
  return out;
}

}  // namespace gapkit
