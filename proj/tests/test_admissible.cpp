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

#include <doctest.h>

#include <random>

#include "gapkit/admissible.hpp"
#include "gapkit/error.hpp"
#include "oracles.hpp"

using namespace gapkit;
using V = std::vector<std::uint64_t>;

TEST_CASE("tuples") {
  const Tuple t{6, 0, 2};
  CHECK(std::vector<std::int64_t>(t.begin(), t.end()) == std::vector<std::int64_t>{0, 2, 6});
  CHECK(t.contains(2));
  CHECK_FALSE(t.contains(3));
  CHECK_THROWS_AS((Tuple{1, 1}), Error);
}

TEST_CASE("residues and admissibility") {
  CHECK(residues_mod({0, 2, 6}, 3) == V{0, 2});
  CHECK(residues_mod({0, 1}, 2) == V{0, 1});
  CHECK(residues_mod({17, 23}, 11) == V{1, 6});
  CHECK(residues_mod({-1}, 5) == V{4});
  CHECK_FALSE(is_admissible({0, 1}));
  CHECK(is_admissible({}));
  CHECK(is_admissible({0, 2, 6}));
  CHECK_FALSE(is_admissible({0, 2, 4}));
  CHECK(omega_H(5, {1, 2}) == 3);
  CHECK(omega_H(7, {}) == 7);
  CHECK(omega_H(11, {17, 23}) == 9);
}

TEST_CASE("densities") {
  const V s711{7, 11};
  CHECK(sigma(s711) == doctest::Approx(60.0 / 77));
  CHECK(sigma_exact(s711) == mpq_class(60, 77));
  CHECK(sigma(V{2}) == 0.5L);
  CHECK(sigma_exact(V{2, 3, 5, 7}) == mpq_class(8, 35));
  CHECK(sigma(V{}) == 1.0L);
  CHECK(sigma_H(s711, {}) == sigma(s711));
  CHECK(sigma_H_exact(V{5}, {1, 2}) == mpq_class(2, 3));
  CHECK(sigma_H_exact(s711, {17, 23}) == mpq_class(32, 45));
  CHECK(sigma_H(s711, {17, 23}) == doctest::Approx(32.0 / 45));
  try {
    sigma_H(V{2}, {0, 1});
    FAIL("expected degenerate error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate);
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
  CHECK_THROWS_AS(sigma(V{7, 7}), Error);
  CHECK_THROWS_AS(sigma(V{9}), Error);
}

TEST_CASE("repulsive sets") {
  CHECK(check_repulsive(V{101}, 1).repulsive);
  CHECK(check_repulsive(V{}, 1).repulsive);
  CHECK(check_repulsive(V{}, 1).tightest_prime == 0);
  std::vector<std::uint64_t> small;
  for (std::uint64_t p = 2; p < 100; ++p)
    if (oracle::is_prime(p)) small.push_back(p);
  const auto r = check_repulsive(small, 1);
  CHECK_FALSE(r.repulsive);
  CHECK(r.margins.size() == small.size());
  CHECK_FALSE(check_repulsive(V{101, 10007}, 1).repulsive);
  CHECK(check_repulsive(V{101, 10007}, 2).repulsive);
  CHECK_THROWS_AS(check_repulsive(V{5, 3}, 1), Error);
  CHECK_THROWS_AS(check_repulsive(V{5}, 0), Error);
  const RepulsiveSet z{V{101, 10007}, 1};
  CHECK(z.contains(101));
  CHECK_FALSE(z.contains(103));
}

TEST_CASE("admissibility matches brute force on random tuples in [0, 50]") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 20000; ++iter) {
    const auto k = oracle::bounded(rng, 0, 6);
    std::vector<std::int64_t> v;
    while (v.size() < k) {
      const auto e = static_cast<std::int64_t>(oracle::bounded(rng, 0, 50));
      if (std::find(v.begin(), v.end(), e) == v.end()) v.push_back(e);
    }
    if (is_admissible(Tuple(v)) != oracle::admissible(v)) FAIL("mismatch on tuple of size " << k);
  }
}

TEST_CASE("density and residue properties") {
  const auto primes = oracle::primes_upto(400);
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::uint64_t> s;
    for (const auto p : primes)
      if (p > 7 && rng() % 3 == 0) s.push_back(p);
    std::vector<std::int64_t> h;
    const auto k = oracle::bounded(rng, 0, 7);
    while (h.size() < k) {
      const auto e = static_cast<std::int64_t>(oracle::bounded(rng, 0, 5000));
      if (std::find(h.begin(), h.end(), e) == h.end()) h.push_back(e);
    }
    const Tuple ht(h);
    CHECK(sigma_H(s, ht) <= sigma(s));
    const auto head = std::span(s).first(std::min<std::size_t>(s.size(), 64));
    CHECK((sigma_H_exact(head, ht) == sigma_exact(head)) == (ht.empty() || head.empty()));
    for (const auto p : {2, 3, 5, 13, 101})
      CHECK(omega_H(static_cast<std::uint64_t>(p), ht) + residues_mod(ht, static_cast<std::uint64_t>(p)).size() ==
            static_cast<std::uint64_t>(p));
  }
}

TEST_CASE("sets of large primes are admissible") {
  const auto primes = oracle::primes_upto(2000);
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    const auto k = oracle::bounded(rng, 1, 40);
    std::vector<std::int64_t> h;
    while (h.size() < k) {
      const auto p = static_cast<std::int64_t>(primes[oracle::bounded(rng, 0, primes.size() - 1)]);
      if (p > static_cast<std::int64_t>(k) && std::find(h.begin(), h.end(), p) == h.end()) h.push_back(p);
    }
    CHECK(is_admissible(Tuple(h)));
  }
}
