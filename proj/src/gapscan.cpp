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

#include "gapkit/gapscan.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "gapkit/error.hpp"

namespace gapkit {

namespace {

// Visits consecutive prime pairs (p, q) with p < limit and q <= cap.
template <class Fn>
void for_each_pair(const PrimeStore& store, std::uint64_t limit, std::uint64_t cap, Fn&& fn) {
  if (limit > store.limit()) fail(ErrorKind::out_of_range, "limit exceeds the prime store");
  std::uint64_t prev = 0;
  bool done = false;
  store.for_each_prime({1, limit - (limit > 0)}, [&](std::uint64_t p) {
    if (prev) fn(prev, p);
    prev = p;
  });
  if (!prev) return;
  // successor of the last prime below limit
  for (std::uint64_t lo = limit - 1; !done && lo < cap; lo += 1u << 16) {
    const std::uint64_t hi = std::min<std::uint64_t>(cap, lo + (1u << 16));
    for (const auto q : store.primes_in({lo, hi})) {
      fn(prev, q);
      done = true;
      break;
    }
  }
}

}  // namespace

void scan_gaps(const PrimeStore& store, std::uint64_t limit, const Normalizer* f, const GapSink& sink) {
  if (limit < 3) return;
  for_each_pair(store, limit, store.limit(), [&](std::uint64_t p, std::uint64_t q) {
    GapRecord r{p, q - p, std::nullopt};
    if (f) {
      if (const auto v = f->try_eval(static_cast<long double>(p))) r.normalized = static_cast<long double>(r.d) / *v;
    }
    sink(r);
  });
}

std::vector<GapRecord> collect_gaps(const PrimeStore& store, std::uint64_t limit, const Normalizer* f) {
  std::vector<GapRecord> out;
  scan_gaps(store, limit, f, [&](const GapRecord& r) { out.push_back(r); });
  return out;
}

long double average_normalized(const PrimeStore& store, std::uint64_t limit) {
  if (limit < 10) fail(ErrorKind::argument, "average_normalized needs limit >= 10");
  long double sum = 0;
  std::uint64_t n = 0;
  for_each_pair(store, limit, limit, [&](std::uint64_t p, std::uint64_t q) {
    sum += static_cast<long double>(q - p) / std::log(static_cast<long double>(p));
    ++n;
  });
  return sum / static_cast<long double>(n);
}

CramerBin cramer_bin_fraction(const PrimeStore& store, std::uint64_t limit, long double a, long double b) {
  if (!(a >= 0 && b > a)) fail(ErrorKind::argument, "need 0 <= a < b");
  std::uint64_t hits = 0;
  std::uint64_t n = 0;
  for_each_pair(store, limit, limit, [&](std::uint64_t p, std::uint64_t q) {
    const long double v = static_cast<long double>(q - p) / std::log(static_cast<long double>(p));
    if (a < v && v <= b) ++hits;
    ++n;
  });
  CramerBin out;
  out.empirical = n ? static_cast<long double>(hits) / static_cast<long double>(n) : 0;
  out.model = std::exp(-a) - (std::isinf(b) ? 0 : std::exp(-b));
  return out;
}

std::uint64_t Histogram::total() const {
  std::uint64_t t = overflow.count;
  for (const auto& b : bins) t += b.count;
  return t;
}

Histogram histogram(const PrimeStore& store, std::uint64_t limit, const Normalizer& f, long double bin_width,
                    long double x_max) {
  if (!(bin_width > 0)) fail(ErrorKind::argument, "bin width must be positive");
  if (!(x_max > 0)) fail(ErrorKind::argument, "x_max must be positive");
  const auto n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(x_max / bin_width)));
  Histogram h;
  for (std::size_t i = 0; i < n; ++i)
    h.bins.push_back({bin_width * static_cast<long double>(i), bin_width * static_cast<long double>(i + 1), 0});
  h.overflow = {x_max, std::numeric_limits<long double>::infinity(), 0};
  scan_gaps(store, limit, &f, [&](const GapRecord& r) {
    if (!r.normalized) return;
    const long double v = *r.normalized;
    if (v > x_max) {
      ++h.overflow.count;
      return;
    }
    ++h.bins[std::min(n - 1, static_cast<std::size_t>(v / bin_width))].count;
  });
  return h;
}

void chains(const PrimeStore& store, std::uint64_t limit, const Normalizer& f, std::size_t a, const ChainSink& sink) {
  if (a == 0) fail(ErrorKind::argument, "chain length must be >= 1");
  std::deque<GapRecord> window;
  std::uint64_t index = 0;
  scan_gaps(store, limit, &f, [&](const GapRecord& r) {
    window.push_back(r);
    if (window.size() > a) window.pop_front();
    if (window.size() == a) sink({index++, {window.begin(), window.end()}});
  });
}

std::vector<DifferenceHit> difference_hits(const PrimeStore& store, std::uint64_t limit, const Normalizer& f,
                                           std::span<const long double> alphas, long double tol) {
  if (!(tol >= 0)) fail(ErrorKind::argument, "tol must be nonnegative");
  for (std::size_t i = 1; i < alphas.size(); ++i)
    if (alphas[i] < alphas[i - 1]) fail(ErrorKind::argument, "alphas must be ascending");
  struct Pair {
    std::size_t i, j;
    long double target;
    std::optional<GapRecord> hit;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j) pairs.push_back({i, j, alphas[j] - alphas[i], std::nullopt});
  std::size_t open = pairs.size();
  if (open == 0) return {};
  scan_gaps(store, limit, &f, [&](const GapRecord& r) {
    if (!open || !r.normalized) return;
    for (auto& pr : pairs)
      if (!pr.hit && std::fabs(*r.normalized - pr.target) <= tol) {
        pr.hit = r;
        --open;
      }
  });
  std::vector<DifferenceHit> out;
  for (const auto& pr : pairs)
    if (pr.hit) out.push_back({pr.i, pr.j, *pr.hit});
  return out;
}

ThetaConstants theta_constants(const mpq_class& theta) {
  if (theta <= 0 || theta > 1) fail(ErrorKind::argument, "theta must lie in (0, 1]");
  ThetaConstants out;
  out.theta = theta;
  mpz_class m;
  const mpz_class twice = 2 * theta.get_den();
  mpz_cdiv_q(m.get_mpz_t(), twice.get_mpz_t(), theta.get_num().get_mpz_t());
  if (m > 100000) fail(ErrorKind::argument, "theta too small: ceil(2/theta) exceeds 100000");
  out.m = m.get_ui();
  out.bucket_size = out.m + 1;
  mpq_class harmonic = 0;
  for (std::uint64_t k = 1; k <= out.m; ++k) harmonic += mpq_class(1, static_cast<unsigned long>(k));
  out.c1 = 1 / (mpq_class(m) * harmonic);
  out.c1.canonicalize();
  out.c2 = mpq_class(1, static_cast<unsigned long>(out.m));
  return out;
}

}  // namespace gapkit
