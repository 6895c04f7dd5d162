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

#include "gapkit/admissible.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "gapkit/error.hpp"

namespace gapkit {

namespace {

std::uint64_t mod(std::int64_t v, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  const std::int64_t r = v % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

void check_sieving_set(std::span<const std::uint64_t> s_set) {
  std::set<std::uint64_t> seen;
  for (const auto s : s_set) {
    if (!is_small_prime(s)) fail(ErrorKind::argument, std::to_string(s) + " in the sieving set is not prime");
    if (!seen.insert(s).second) fail(ErrorKind::argument, "prime " + std::to_string(s) + " repeated in the sieving set");
  }
}

long double pairwise_product(std::vector<long double> factors) {
  if (factors.empty()) return 1;
  std::sort(factors.begin(), factors.end());
  while (factors.size() > 1) {
    std::vector<long double> next;
    next.reserve((factors.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2) next.push_back(factors[i] * factors[i + 1]);
    if (factors.size() % 2) next.push_back(factors.back());
    factors = std::move(next);
  }
  return factors.front();
}

std::uint64_t checked_omega(std::uint64_t s, const Tuple& h) {
  const std::uint64_t free = omega_H(s, h);
  if (free == 0)
    fail(ErrorKind::degenerate, "h covers every residue class mod " + std::to_string(s) + "; Omega_H(s) is empty");
  return free;
}

}  // namespace

Tuple::Tuple(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    fail(ErrorKind::argument, "tuple elements must be distinct");
}

bool Tuple::contains(std::int64_t v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }

std::vector<std::uint64_t> residues_mod(const Tuple& t, std::uint64_t p) {
  if (p == 0) fail(ErrorKind::argument, "modulus must be positive");
  std::vector<std::uint64_t> out;
  out.reserve(t.size());
  for (const auto e : t) out.push_back(mod(e, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_admissible(const Tuple& t) {
  for (std::uint64_t p = 2; p <= t.size(); ++p) {
    if (!is_small_prime(p)) continue;
    if (residues_mod(t, p).size() == p) return false;
  }
  return true;
}

std::uint64_t omega_H(std::uint64_t s, const Tuple& h) { return s - residues_mod(h, s).size(); }

long double sigma(std::span<const std::uint64_t> s_set) {
  check_sieving_set(s_set);
  std::vector<long double> factors;
  for (const auto s : s_set) factors.push_back(1.0L - 1.0L / static_cast<long double>(s));
  return pairwise_product(std::move(factors));
}

long double sigma_H(std::span<const std::uint64_t> s_set, const Tuple& h) {
  check_sieving_set(s_set);
  std::vector<long double> factors;
  for (const auto s : s_set) factors.push_back(1.0L - 1.0L / static_cast<long double>(checked_omega(s, h)));
  return pairwise_product(std::move(factors));
}

mpq_class sigma_exact(std::span<const std::uint64_t> s_set) {
  check_sieving_set(s_set);
  if (s_set.size() > 64) fail(ErrorKind::argument, "exact sigma is limited to 64 factors");
  mpq_class out = 1;
  for (const auto s : s_set) out *= mpq_class(static_cast<unsigned long>(s - 1), static_cast<unsigned long>(s));
  out.canonicalize();
  return out;
}

mpq_class sigma_H_exact(std::span<const std::uint64_t> s_set, const Tuple& h) {
  check_sieving_set(s_set);
  if (s_set.size() > 64) fail(ErrorKind::argument, "exact sigma_H is limited to 64 factors");
  mpq_class out = 1;
  for (const auto s : s_set) {
    const std::uint64_t free = checked_omega(s, h);
    out *= mpq_class(static_cast<unsigned long>(free - 1), static_cast<unsigned long>(free));
  }
  out.canonicalize();
  return out;
}

bool RepulsiveSet::contains(std::uint64_t p) const {
  return std::find(primes.begin(), primes.end(), p) != primes.end();
}

RepulsiveReport check_repulsive(std::span<const std::uint64_t> z, long double witness_constant) {
  if (!(witness_constant > 0)) fail(ErrorKind::argument, "witness constant must be positive");
  for (std::size_t i = 1; i < z.size(); ++i)
    if (z[i] <= z[i - 1]) fail(ErrorKind::argument, "repulsive set must be strictly ascending");
  RepulsiveReport report;
  report.margins.resize(z.size());
  report.tightest_margin = std::numeric_limits<long double>::infinity();
  long double tail = 0;
  for (std::size_t i = z.size(); i-- > 0;) {
    const auto p = static_cast<long double>(z[i]);
    tail += 1.0L / p;
    const long double margin = witness_constant / p - tail;
    report.margins[i] = margin;
    if (margin < 0) report.repulsive = false;
    if (margin <= report.tightest_margin) {
      report.tightest_margin = margin;
      report.tightest_prime = z[i];
    }
  }
  if (z.empty()) report.tightest_margin = 0;
  return report;
}

}  // namespace gapkit
