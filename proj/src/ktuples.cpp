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

#include "gapkit/ktuples.hpp"

#include <cmath>
#include <set>

#include "gapkit/error.hpp"

namespace gapkit {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

void check_inside(const PlacementPlan& plan) {
  for (std::size_t i = 0; i < plan.intervals.size(); ++i) {
    const auto& iv = plan.intervals[i];
    if (iv.lo < plan.x || iv.hi > plan.y)
      fail(ErrorKind::placement, "interval " + str(i) + " = (" + str(iv.lo) + ", " + str(iv.hi) +
                                     "] escapes (" + str(plan.x) + ", " + str(plan.y) + "]");
  }
}

}  // namespace

std::uint64_t interval_width(std::uint64_t x) {
  if (x < 3) fail(ErrorKind::argument, "x must be >= 3");
  return static_cast<std::uint64_t>(std::floor(static_cast<long double>(x) / std::log(static_cast<long double>(x))));
}

PlacementPlan place_intervals(std::uint64_t x, std::uint64_t y, const Normalizer& f2,
                              std::span<const long double> alphas, long double scale) {
  if (!(scale > 0)) fail(ErrorKind::argument, "scale must be positive");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] >= 0)) fail(ErrorKind::argument, "alphas must be nonnegative");
    if (i > 0 && alphas[i] < alphas[i - 1]) fail(ErrorKind::argument, "alphas must be ascending");
  }
  const TowerReal fx = f2.eval(TowerReal(static_cast<long double>(x)));
  if (!fx.finite()) fail(ErrorKind::domain, f2.name() + "(x) is not representable");

  PlacementPlan plan;
  plan.x = x;
  plan.y = y;
  plan.f2 = f2.name();
  plan.alphas.assign(alphas.begin(), alphas.end());
  plan.scale = scale;
  const std::uint64_t width = interval_width(x);
  for (const auto a : alphas) {
    const long double beta = a * scale;
    plan.betas.push_back(beta);
    const long double v = std::floor(beta * fx.value());
    const long double lo = static_cast<long double>(x) + v;
    if (lo + width > static_cast<long double>(y)) {
      const std::size_t i = plan.betas.size() - 1;
      fail(ErrorKind::placement, "interval " + str(i) + " starting at x + " + std::to_string(static_cast<double>(v)) +
                                     " escapes (" + str(x) + ", " + str(y) + "]");
    }
    const auto ulo = static_cast<std::uint64_t>(lo);
    plan.intervals.push_back({ulo, ulo + width});
  }
  check_inside(plan);
  return plan;
}

PlacementPlan place_intervals_at(std::uint64_t x, std::uint64_t y, std::span<const std::uint64_t> offsets) {
  PlacementPlan plan;
  plan.x = x;
  plan.y = y;
  const std::uint64_t width = interval_width(x);
  for (const auto v : offsets) {
    plan.alphas.push_back(static_cast<long double>(v));
    plan.betas.push_back(static_cast<long double>(v));
    plan.intervals.push_back({x + v, x + v + width});
  }
  check_inside(plan);
  return plan;
}

std::uint64_t compute_D(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y <= x) fail(ErrorKind::argument, "compute_D needs y > x > 0");
  return (y + x - 1) / x;
}

long double estimate_scale(const Normalizer& f1, long double eta, long double c, std::uint64_t x) {
  if (!(c > 0)) fail(ErrorKind::argument, "C must be positive");
  return c * estimate_L_eta(f1, eta, TowerReal(static_cast<long double>(x)));
}

TuplePlan construct_tuples(const PrimeStore& store, const PlacementPlan& plan, std::span<const std::uint64_t> sizes,
                           std::uint64_t D) {
  if (sizes.size() != plan.intervals.size())
    fail(ErrorKind::argument, str(sizes.size()) + " sizes given for " + str(plan.intervals.size()) + " intervals");
  if (D == 0) fail(ErrorKind::argument, "D must be positive");
  TuplePlan out;
  out.x = plan.x;
  out.y = plan.y;
  out.D = D;
  out.intervals = plan.intervals;
  out.sizes.assign(sizes.begin(), sizes.end());

  std::set<std::uint64_t> used;
  std::vector<std::int64_t> all;
  for (std::size_t i = 0; i < plan.intervals.size(); ++i) {
    const auto pool = store.primes_in_ap(plan.intervals[i], 1 % D, D);
    std::vector<std::int64_t> chosen;
    for (const auto p : pool) {
      if (chosen.size() == sizes[i]) break;
      if (used.insert(p).second) chosen.push_back(static_cast<std::int64_t>(p));
    }
    if (chosen.size() < sizes[i])
      fail(ErrorKind::capacity, "interval " + str(i) + " has " + str(chosen.size()) + " unused primes = 1 (mod " +
                                    str(D) + "), " + str(sizes[i]) + " requested");
    all.insert(all.end(), chosen.begin(), chosen.end());
    out.sets.emplace_back(std::move(chosen));
  }
  out.all = Tuple(std::move(all));

  const auto report = verify_smooth_differences(out.all, plan.x);
  if (!report.smooth)
    fail(ErrorKind::integrity, "difference " + std::to_string(*report.b) + " - " + std::to_string(*report.a) +
                                   " has prime factor " + str(report.factor) + " > x");
  const long double ratio = static_cast<long double>(plan.y) / static_cast<long double>(plan.x);
  if (static_cast<long double>(out.all.size()) > ratio)
    out.warnings.push_back("K = " + str(out.all.size()) + " exceeds y/x");
  if (ratio > std::log(static_cast<long double>(plan.x))) out.warnings.push_back("y/x exceeds log x");
  return out;
}

SmoothReport verify_smooth_differences(const Tuple& t, std::uint64_t bound) {
  const auto e = t.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const auto d = static_cast<std::uint64_t>(e[j] - e[i]);
      if (d < 2 || is_smooth(d, bound)) continue;
      return {false, e[i], e[j], largest_prime_factor(d)};
    }
  return {};
}

std::vector<Tuple> partition_equal(const Tuple& t, std::size_t m) {
  if (m == 0 || t.size() % m != 0)
    fail(ErrorKind::partition, str(t.size()) + " elements do not split into " + str(m) + " equal blocks");
  const std::size_t block = t.size() / m;
  std::vector<Tuple> out;
  const auto e = t.elements();
  for (std::size_t i = 0; i < m; ++i)
    out.emplace_back(std::vector<std::int64_t>(e.begin() + i * block, e.begin() + (i + 1) * block));
  return out;
}

}  // namespace gapkit
