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

#include "gapkit/covering.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "gapkit/error.hpp"

namespace gapkit {

namespace {

constexpr std::uint64_t kMaxInterval = std::uint64_t{1} << 32;

std::string str(std::uint64_t v) { return std::to_string(v); }

// Unbiased draw from [0, n), independent of the standard library's
// distribution implementation so seeds replay across platforms.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

std::uint64_t residue_of(std::int64_t v, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  const std::int64_t r = v % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::vector<std::uint64_t> kill_counts(const SiftState& state, std::uint64_t p) {
  std::vector<std::uint64_t> counts(p, 0);
  const std::uint64_t first = state.interval.lo + 1;
  state.survivors.for_each_set([&](std::size_t i) { ++counts[(first + i) % p]; });
  return counts;
}

void apply_class(SiftState& state, std::uint64_t p, std::uint64_t c) {
  const std::uint64_t lo = state.interval.lo + 1;
  const std::uint64_t hi = state.interval.hi + 1;
  for (std::uint64_t t = lo + (c + p - lo % p) % p; t < hi; t += p) state.survivors.reset(t - lo);
  state.classes.push_back({p, c});
}

void check_stage_prime(const SiftState& state, std::uint64_t p) {
  if (p < 2 || p > state.interval.lo)
    fail(ErrorKind::argument, "stage prime " + str(p) + " must lie in [2, x] with x = " + str(state.interval.lo));
  for (const auto& rc : state.classes)
    if (rc.p == p) fail(ErrorKind::integrity, "modulus " + str(p) + " already has a class");
}

// Allowed class (not occupied by H) with the largest kill count; smallest
// residue on ties.
std::uint64_t best_class(const SiftState& state, std::uint64_t p, const std::vector<std::uint64_t>& occupied) {
  const auto counts = kill_counts(state, p);
  std::optional<std::uint64_t> best;
  for (std::uint64_t c = 0; c < p; ++c) {
    if (std::binary_search(occupied.begin(), occupied.end(), c)) continue;
    if (!best || counts[c] > counts[*best]) best = c;
  }
  if (!best) fail(ErrorKind::degenerate, "Omega_H(" + str(p) + ") is empty");
  return *best;
}

bool is_prime_any(const PrimeStore& store, std::uint64_t n) {
  if (n <= store.limit()) return store.is_prime(n);
  return is_probable_prime(mpz_class(static_cast<unsigned long>(n))).verdict != Verdict::composite;
}

}  // namespace

std::string_view to_string(Profile p) { return p == Profile::paper ? "paper" : "toy"; }
std::string_view to_string(Strategy s) { return s == Strategy::greedy ? "greedy" : "random"; }

Profile parse_profile(std::string_view text) {
  if (text == "paper") return Profile::paper;
  if (text == "toy") return Profile::toy;
  fail(ErrorKind::argument, "unknown profile '" + std::string(text) + "' (expected paper or toy)");
}

Strategy parse_strategy(std::string_view text) {
  if (text == "greedy") return Strategy::greedy;
  if (text == "random") return Strategy::random;
  fail(ErrorKind::argument, "unknown strategy '" + std::string(text) + "' (expected greedy or random)");
}

Params plan_parameters(std::uint64_t x, long double c_const, Profile profile, const ParamOverrides& overrides) {
  if (x < 3) fail(ErrorKind::argument, "x must be >= 3");
  if (!(c_const > 0)) fail(ErrorKind::argument, "c must be positive");
  Params params;
  params.profile = profile;
  params.x = x;
  params.c_const = c_const;

  const long double lx = std::log(static_cast<long double>(x));
  const long double l2 = std::log(lx);
  const long double l3 = l2 > 0 ? std::log(l2) : -1;
  const auto formula_y = [&]() -> long double { return std::floor(c_const * static_cast<long double>(x) * lx * l3 / l2); };

  if (profile == Profile::paper) {
    if (!(l3 > 0)) fail(ErrorKind::domain, "paper profile needs log3 x > 0, i.e. x > e^e; got x = " + str(x));
    if (l3 < 1) params.warnings.push_back("log3 x = " + std::to_string(static_cast<double>(l3)) + " < 1");
    const long double y = formula_y();
    params.y = y > static_cast<long double>(UINT64_MAX / 2) ? UINT64_MAX / 2 : static_cast<std::uint64_t>(y);
    params.z = static_cast<std::uint64_t>(std::floor(std::exp(lx * l3 / (4 * l2))));
    const long double s_lo = std::pow(lx, 20.0L);
    if (s_lo >= static_cast<long double>(params.z)) {
      params.s_range = {params.z, params.z};
      params.warnings.push_back("S-stage is empty: (log x)^20 = " + std::to_string(static_cast<double>(s_lo)) +
                                " exceeds z = " + str(params.z));
    } else {
      params.s_range = {static_cast<std::uint64_t>(std::floor(s_lo)), params.z};
    }
    params.p_range = {x / 2, x};
  } else {
    if (overrides.y) {
      params.y = *overrides.y;
    } else {
      if (!(l3 > 0)) fail(ErrorKind::degenerate, "toy profile at x = " + str(x) + " needs an explicit y");
      params.y = static_cast<std::uint64_t>(std::max(0.0L, formula_y()));
    }
    if (overrides.s_lo && !overrides.z) fail(ErrorKind::argument, "s_lo override needs z");
    if (overrides.z) {
      params.z = *overrides.z;
      if (params.z > x) fail(ErrorKind::argument, "z must not exceed x");
      params.s_range = {overrides.s_lo.value_or(1), params.z};
    } else {
      params.z = 1;
      params.s_range = {1, 1};
    }
    if (overrides.p_lo) {
      if (*overrides.p_lo < x / 2 || *overrides.p_lo > x)
        fail(ErrorKind::argument, "p_lo must lie in [x/2, x]");
      params.p_range = {*overrides.p_lo, x};
    } else {
      params.p_range = {x, x};
    }
    if (!params.s_range.empty() && !params.p_range.empty() && params.s_range.hi > params.p_range.lo)
      fail(ErrorKind::argument, "S-stage range overlaps the P-stage range");
  }
  if (params.y <= x) fail(ErrorKind::degenerate, "y = " + str(params.y) + " does not exceed x = " + str(x));
  if (params.y - x > kMaxInterval) fail(ErrorKind::argument, "interval (x, y] exceeds 2^32 elements");
  params.q_range = {x, params.y};
  return params;
}

SiftState::SiftState(Interval range) : interval(range), survivors(range.hi > range.lo ? range.hi - range.lo : 0, true) {
  if (range.hi - range.lo > kMaxInterval) fail(ErrorKind::argument, "interval exceeds 2^32 elements");
}

std::vector<std::uint64_t> SiftState::survivor_list() const {
  std::vector<std::uint64_t> out;
  survivors.for_each_set([&](std::size_t i) { out.push_back(interval.lo + 1 + i); });
  return out;
}

SiftState sift_small_stage(SiftState state, std::span<const std::uint64_t> primes, const Tuple& h) {
  for (const auto p : primes) {
    check_stage_prime(state, p);
    const auto occupied = residues_mod(h, p);
    // Unreachable for H inside (x, y]: no q > x >= p is divisible by p.
    const bool zero_free = !std::binary_search(occupied.begin(), occupied.end(), std::uint64_t{0});
    apply_class(state, p, zero_free ? 0 : best_class(state, p, occupied));
  }
  return state;
}

SiftState sift_greedy_stage(SiftState state, std::span<const std::uint64_t> primes, const Tuple& h) {
  for (const auto p : primes) {
    check_stage_prime(state, p);
    apply_class(state, p, best_class(state, p, residues_mod(h, p)));
  }
  return state;
}

SiftState sift_random_stage(SiftState state, std::span<const std::uint64_t> primes, const Tuple& h,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (const auto s : primes) {
    check_stage_prime(state, s);
    const auto occupied = residues_mod(h, s);
    if (occupied.size() == s) fail(ErrorKind::degenerate, "Omega_H(" + str(s) + ") is empty");
    // index-th residue outside `occupied`
    std::uint64_t index = draw_below(rng, s - occupied.size());
    std::uint64_t c = 0;
    for (;; ++c) {
      if (std::binary_search(occupied.begin(), occupied.end(), c)) continue;
      if (index-- == 0) break;
    }
    apply_class(state, s, c);
  }
  return state;
}

CoverCertificate complete_cover(SiftState state, const Tuple& h, std::span<const std::uint64_t> completion_primes,
                                const RepulsiveSet& excluded, const CoverMeta& meta) {
  if (!is_admissible(h)) fail(ErrorKind::admissibility, "H is not admissible");
  const std::uint64_t x = state.interval.lo;
  const std::uint64_t y = state.interval.hi;
  for (const auto q : h) {
    if (q <= static_cast<std::int64_t>(x) || q > static_cast<std::int64_t>(y))
      fail(ErrorKind::argument, "element " + std::to_string(q) + " of H lies outside (x, y]");
    if (!state.survives(static_cast<std::uint64_t>(q)))
      fail(ErrorKind::integrity, "element " + std::to_string(q) + " of H was sifted out");
  }
  std::set<std::uint64_t> used;
  for (const auto& rc : state.classes) used.insert(rc.p);
  for (std::size_t i = 0; i < completion_primes.size(); ++i) {
    const auto p = completion_primes[i];
    if (i > 0 && p <= completion_primes[i - 1]) fail(ErrorKind::argument, "completion primes must be ascending");
    if (p <= x || p > meta.c_upper)
      fail(ErrorKind::argument, "completion prime " + str(p) + " outside (x, c_upper]");
    if (excluded.contains(p)) fail(ErrorKind::argument, "completion prime " + str(p) + " is excluded");
    if (used.count(p)) fail(ErrorKind::argument, "completion prime " + str(p) + " already used");
  }

  std::vector<bool> taken(completion_primes.size(), false);
  std::size_t available = completion_primes.size();
  for (std::uint64_t t = x + 1; t <= y; ++t) {
    if (!state.survives(t) || h.contains(static_cast<std::int64_t>(t))) continue;
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < completion_primes.size() && !pick; ++i) {
      const auto p = completion_primes[i];
      if (taken[i] || p == t) continue;
      const bool hits_h = std::any_of(h.begin(), h.end(), [&](std::int64_t q) {
        return residue_of(static_cast<std::int64_t>(t) - q, p) == 0;
      });
      if (!hits_h) pick = i;
    }
    if (!pick) {
      std::uint64_t remaining = 0;
      for (std::uint64_t u = t; u <= y; ++u)
        if (state.survives(u) && !h.contains(static_cast<std::int64_t>(u))) ++remaining;
      fail(ErrorKind::capacity, str(remaining) + " survivors outside H remain but only " + str(available) +
                                    " completion primes in (x, " + str(meta.c_upper) + "] are unused; raise C");
    }
    taken[*pick] = true;
    --available;
    apply_class(state, completion_primes[*pick], t % completion_primes[*pick]);
  }

  CoverCertificate cert;
  cert.profile = meta.profile;
  cert.x = x;
  cert.y = y;
  cert.h = h;
  cert.classes = std::move(state.classes);
  cert.excluded = excluded;
  cert.c_upper = meta.c_upper;
  cert.strategy = meta.strategy;
  cert.seed = meta.seed;
  const auto check = verify_certificate(cert);
  if (!check.ok) fail(ErrorKind::integrity, "emitted certificate failed re-verification: " + check.problems.front());
  return cert;
}

CoverCertificate build_cover(const PrimeStore& store, const Params& params, const Tuple& h,
                             const CoverOptions& options) {
  const std::uint64_t x = params.x;
  const std::uint64_t y = params.y;
  if (options.c_cap < 2) fail(ErrorKind::argument, "C cap must be >= 2");
  if (store.limit() < y) fail(ErrorKind::out_of_range, "prime store must reach y = " + str(y));
  for (const auto q : h) {
    if (q <= static_cast<std::int64_t>(x) || q > static_cast<std::int64_t>(y))
      fail(ErrorKind::argument, "element " + std::to_string(q) + " of H lies outside (x, y]");
    if (!is_prime_any(store, static_cast<std::uint64_t>(q)))
      fail(ErrorKind::argument, "element " + std::to_string(q) + " of H is not prime");
  }
  const auto repulsive = check_repulsive(options.excluded.primes, options.excluded.witness_constant);
  if (!repulsive.repulsive)
    fail(ErrorKind::argument, "excluded set is not repulsive at p' = " + str(repulsive.tightest_prime));

  std::vector<std::uint64_t> zero_stage, s_stage, p_stage;
  for (const auto p : store.primes_in({1, x})) {
    if (options.excluded.contains(p)) continue;
    if (params.s_range.contains(p)) {
      s_stage.push_back(p);
    } else if (params.p_range.contains(p)) {
      p_stage.push_back(p);
    } else {
      zero_stage.push_back(p);
    }
  }

  SiftState state(params.q_range);
  state = sift_small_stage(std::move(state), zero_stage, h);
  state = options.strategy == Strategy::random ? sift_random_stage(std::move(state), s_stage, h, options.seed)
                                               : sift_greedy_stage(std::move(state), s_stage, h);
  state = sift_greedy_stage(std::move(state), p_stage, h);

  CoverMeta meta{params.profile, options.strategy, options.seed, 0};
  std::string last_failure;
  for (std::uint64_t c = 2; c <= options.c_cap; c *= 2) {
    meta.c_upper = c * x;
    if (meta.c_upper > store.limit())
      fail(ErrorKind::capacity, "prime store limit " + str(store.limit()) + " is below C x = " + str(meta.c_upper) +
                                    (last_failure.empty() ? "" : " after: " + last_failure));
    std::vector<std::uint64_t> completion;
    for (const auto p : store.primes_in({x, meta.c_upper}))
      if (!options.excluded.contains(p)) completion.push_back(p);
    try {
      return complete_cover(state, h, completion, options.excluded, meta);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::capacity) throw;
      last_failure = e.what();
    }
  }
  fail(ErrorKind::capacity, "completion failed for every C <= " + str(options.c_cap) + ": " + last_failure);
}

std::vector<std::uint64_t> survivors(const CoverCertificate& cert, int threads) {
  const BitVector bits = threads == 1 ? kernels::serial::sift(cert.x + 1, cert.y + 1, cert.classes)
                                      : kernels::omp::sift(cert.x + 1, cert.y + 1, cert.classes, threads);
  std::vector<std::uint64_t> out;
  bits.for_each_set([&](std::size_t i) { out.push_back(cert.x + 1 + i); });
  return out;
}

CertificateCheck verify_certificate(const CoverCertificate& cert, int threads) {
  CertificateCheck check;
  const auto problem = [&](std::string text) {
    check.ok = false;
    check.problems.push_back(std::move(text));
  };
  std::set<std::uint64_t> moduli;
  for (const auto& rc : cert.classes) {
    if (rc.p < 2 || rc.c >= rc.p) problem("malformed class (" + str(rc.p) + ", " + str(rc.c) + ")");
    if (!moduli.insert(rc.p).second) problem("modulus " + str(rc.p) + " appears twice");
    if (cert.excluded.contains(rc.p)) problem("modulus " + str(rc.p) + " is in the excluded set");
    if (rc.p > cert.c_upper) problem("modulus " + str(rc.p) + " exceeds c_upper = " + str(cert.c_upper));
    for (const auto q : cert.h)
      if (rc.p >= 2 && residue_of(q, rc.p) == rc.c)
        problem("class (" + str(rc.p) + ", " + str(rc.c) + ") hits H element " + std::to_string(q));
  }
  if (!check.ok) return check;
  const auto left = survivors(cert, threads);
  const std::vector<std::uint64_t> expected(cert.h.begin(), cert.h.end());
  if (left != expected) problem("survivor set has " + str(left.size()) + " elements, H has " + str(expected.size()));
  return check;
}

CrtResult assemble_crt(const CoverCertificate& cert) {
  std::set<std::uint64_t> moduli;
  CrtResult out{1, 0};
  for (const auto& rc : cert.classes) {
    if (!moduli.insert(rc.p).second) fail(ErrorKind::integrity, "duplicate modulus " + str(rc.p));
    const mpz_class p(static_cast<unsigned long>(rc.p));
    const mpz_class target(static_cast<unsigned long>((rc.p - rc.c % rc.p) % rc.p));
    // b' = b + W * ((target - b) * W^{-1} mod p)
    mpz_class w_inv;
    if (mpz_invert(w_inv.get_mpz_t(), out.W.get_mpz_t(), p.get_mpz_t()) == 0)
      fail(ErrorKind::integrity, "modulus " + str(rc.p) + " shares a factor with earlier moduli");
    mpz_class step = (target - out.b) * w_inv;
    mpz_fdiv_r(step.get_mpz_t(), step.get_mpz_t(), p.get_mpz_t());
    out.b += out.W * step;
    out.W *= p;
  }
  return out;
}

std::optional<CorridorWitness> find_corridor(const CoverCertificate& cert, std::uint64_t k_min, std::uint64_t k_max,
                                             unsigned mr_rounds, std::uint64_t seed) {
  const auto check = verify_certificate(cert);
  if (!check.ok) fail(ErrorKind::integrity, "certificate failed re-verification: " + check.problems.front());
  const CrtResult crt = assemble_crt(cert);
  const mpz_class floor_n = mpz_class(static_cast<unsigned long>(cert.c_upper)) - mpz_class(static_cast<unsigned long>(cert.x));

  for (std::uint64_t k = k_min; k <= k_max && k >= k_min; ++k) {
    const mpz_class n = crt.b + crt.W * mpz_class(static_cast<unsigned long>(k));
    if (n <= floor_n) continue;  // need n + x > c_upper
    std::vector<PrimeOffset> verdicts;
    bool all_prime = true;
    for (const auto q : cert.h) {
      const auto r = is_probable_prime(n + mpz_class(static_cast<long>(q)), mr_rounds, seed);
      if (r.verdict == Verdict::composite) {
        all_prime = false;
        break;
      }
      verdicts.push_back({static_cast<std::uint64_t>(q), r.verdict});
    }
    if (!all_prime) continue;

    CorridorWitness w;
    w.W = crt.W;
    w.b = crt.b;
    w.k = k;
    w.n = n;
    w.x = cert.x;
    w.y = cert.y;
    w.mr_rounds = mr_rounds;
    w.seed = seed;
    w.prime_offsets = std::move(verdicts);
    // smallest killing modulus per offset
    std::vector<std::uint64_t> killer(cert.y - cert.x, 0);
    auto classes = cert.classes;
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.p < b.p; });
    const std::uint64_t lo = cert.x + 1;
    for (const auto& rc : classes)
      for (std::uint64_t t = lo + (rc.c + rc.p - lo % rc.p) % rc.p; t <= cert.y; t += rc.p)
        if (killer[t - lo] == 0) killer[t - lo] = rc.p;
    for (std::uint64_t t = lo; t <= cert.y; ++t)
      if (killer[t - lo] != 0) w.composite_offsets.push_back({t, killer[t - lo]});
    return w;
  }
  return std::nullopt;
}

CorridorCheck verify_corridor(const CorridorWitness& witness, const CoverCertificate& cert) {
  CorridorCheck out;
  const auto problem = [&](std::string text, std::optional<std::uint64_t> t = std::nullopt) {
    out.ok = false;
    out.problems.push_back(std::move(text));
    if (t && !out.offending_t) out.offending_t = t;
  };
  if (witness.x != cert.x || witness.y != cert.y) {
    problem("witness interval does not match the certificate");
    return out;
  }
  const CrtResult crt = assemble_crt(cert);
  if (witness.W != crt.W || witness.b != crt.b) problem("W or b disagrees with the certificate's CRT assembly");
  if (crt.W > 0) {
    mpz_class diff = witness.n - crt.b;
    if (!mpz_divisible_p(diff.get_mpz_t(), crt.W.get_mpz_t())) problem("n is not congruent to b modulo W");
  }

  std::set<std::uint64_t> moduli;
  for (const auto& rc : cert.classes) moduli.insert(rc.p);
  std::set<std::uint64_t> covered;
  for (const auto& [t, p] : witness.composite_offsets) {
    if (t <= cert.x || t > cert.y) {
      problem("offset " + str(t) + " lies outside (x, y]", t);
      continue;
    }
    if (cert.h.contains(static_cast<std::int64_t>(t))) problem("offset " + str(t) + " belongs to H", t);
    if (!moduli.count(p)) problem("offset " + str(t) + " cites " + str(p) + ", not a certificate modulus", t);
    const mpz_class m = witness.n + mpz_class(static_cast<unsigned long>(t));
    if (p < 2 || !mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      problem(str(p) + " does not divide n + " + str(t), t);
      continue;
    }
    if (m <= mpz_class(static_cast<unsigned long>(p))) problem("n + " + str(t) + " equals its divisor " + str(p), t);
    covered.insert(t);
  }
  for (std::uint64_t t = cert.x + 1; t <= cert.y; ++t)
    if (!cert.h.contains(static_cast<std::int64_t>(t)) && !covered.count(t))
      problem("offset " + str(t) + " has no recorded divisor", t);

  std::set<std::uint64_t> tested;
  for (const auto& po : witness.prime_offsets) tested.insert(po.q);
  for (const auto q : cert.h) {
    const auto uq = static_cast<std::uint64_t>(q);
    if (!tested.count(uq)) problem("H element " + str(uq) + " has no primality record");
    const auto r = is_probable_prime(witness.n + mpz_class(static_cast<unsigned long>(uq)), witness.mr_rounds, witness.seed);
    if (r.verdict == Verdict::composite) problem("n + " + str(uq) + " is composite", uq);
  }
  return out;
}

}  // namespace gapkit
