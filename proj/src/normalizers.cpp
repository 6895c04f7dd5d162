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

#include "gapkit/normalizers.hpp"

#include <cmath>
#include <string>

#include "gapkit/error.hpp"

namespace gapkit {

namespace {

struct CatalogEntry {
  std::string_view name;
  NormalizerKind kind;
  LogMonomial monomial;
};

LogMonomial mono(std::initializer_list<std::pair<int, long double>> terms) {
  LogMonomial m;
  for (const auto& [k, e] : terms) m.exponents[static_cast<std::size_t>(k)] = e;
  return m;
}

const std::array<CatalogEntry, 14>& catalog() {
  using K = NormalizerKind;
  static const std::array<CatalogEntry, 14> entries = {{
      {"log", K::first_kind, mono({{1, 1}})},
      {"log2", K::first_kind, mono({{2, 1}})},
      {"log3", K::first_kind, mono({{3, 1}})},
      {"log6", K::first_kind, mono({{6, 1}})},
      {"sqrt_log", K::first_kind, mono({{1, 0.5L}})},
      {"log2_over_sqrt_log3", K::first_kind, mono({{2, 1}, {3, -0.5L}})},
      {"log_pow_7_9", K::first_kind, mono({{1, 7.0L / 9.0L}})},
      {"R", K::raw, mono({{1, 1}, {2, 1}, {3, -2}, {4, 1}})},
      {"R1", K::raw, mono({{1, 1}, {2, 1}, {3, -1}})},
      {"R1_log5", K::raw, mono({{1, 1}, {2, 1}, {3, -1}, {5, 1}})},
      {"x", K::second_kind, mono({{0, 1}})},
      {"x_log_over_log2", K::second_kind, mono({{0, 1}, {1, 1}, {2, -1}})},
      {"x_over_log", K::raw, mono({{0, 1}, {1, -1}})},
      {"x_sq", K::raw, mono({{0, 2}})},
  }};
  return entries;
}

std::array<std::string_view, 14> make_names() {
  std::array<std::string_view, 14> names{};
  for (std::size_t i = 0; i < names.size(); ++i) names[i] = catalog()[i].name;
  return names;
}

// Accepts a >= b up to a few ulps; domain starts computed as exp(exp(e))
// and as log of a larger tower disagree in the last bits.
bool reaches(const TowerReal& a, const TowerReal& b) {
  if (a >= b) return true;
  return std::fabs(ratio(a, b) - 1) <= 1e-15L;
}

long double power(long double base, long double e) {
  if (e == 1) return base;
  if (e == -1) return 1 / base;
  if (e == 2) return base * base;
  if (e == -2) return 1 / (base * base);
  if (e == 0.5L) return std::sqrt(base);
  if (e == -0.5L) return 1 / std::sqrt(base);
  return std::pow(base, e);
}

// |v - target| never grows along the grid and ends strictly smaller.
bool shrinks_toward(const std::vector<long double>& v, long double target) {
  if (v.size() < 2) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::fabs(v[i] - target) > std::fabs(v[i - 1] - target)) return false;
  return std::fabs(v.back() - target) < std::fabs(v.front() - target);
}

template <class Sample>
std::vector<long double> ratios_of(const std::vector<Sample>& samples, long double param) {
  std::vector<long double> out;
  for (const auto& s : samples) {
    if constexpr (requires { s.param; }) {
      if (s.param != param) continue;
    }
    out.push_back(s.ratio);
  }
  return out;
}

void require_in_domain(const Normalizer& f, std::span<const TowerReal> grid) {
  for (const auto& t : grid) {
    if (t < f.domain_start())
      fail(ErrorKind::domain, "grid point " + t.to_string() + " precedes the domain start " +
                                  f.domain_start().to_string() + " of " + f.name());
  }
}

bool monotone_on(const Normalizer& f, std::span<const TowerReal> grid) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(f.eval(grid[i]) > f.eval(grid[i - 1]))) return false;
  return true;
}

}  // namespace

std::string_view to_string(NormalizerKind kind) {
  switch (kind) {
    case NormalizerKind::first_kind: return "first-kind";
    case NormalizerKind::second_kind: return "second-kind";
    case NormalizerKind::composed: return "composed";
    case NormalizerKind::raw: return "raw";
  }
  return "raw";
}

int LogMonomial::depth() const noexcept {
  for (int k = static_cast<int>(exponents.size()) - 1; k > 0; --k)
    if (exponents[static_cast<std::size_t>(k)] != 0) return k;
  return 0;
}

TowerReal LogMonomial::eval(const TowerReal& t) const {
  const int depth_needed = this->depth() + 1;
  std::array<TowerReal, 8> logs;
  logs[0] = t;
  for (int k = 1; k <= depth_needed; ++k) logs[static_cast<std::size_t>(k)] = logs[static_cast<std::size_t>(k - 1)].log();

  bool all_finite = true;
  for (std::size_t k = 0; k < exponents.size(); ++k)
    if (exponents[k] != 0 && !logs[k].finite()) all_finite = false;
  if (all_finite) {
    long double product = 1;
    for (std::size_t k = 0; k < exponents.size(); ++k)
      if (exponents[k] != 0) product *= power(logs[k].top(), exponents[k]);
    if (std::isfinite(product) && product > 0) return TowerReal(product);
  }
  // log f = sum_k e_k log_{k+1} T
  long double log_value = 0;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] == 0) continue;
    if (!logs[k + 1].finite())
      fail(ErrorKind::domain, "normalizer value at " + t.to_string() + " is not representable");
    log_value += exponents[k] * logs[k + 1].top();
  }
  return TowerReal::iterated_exp(1, log_value);
}

TowerReal Normalizer::eval_unchecked(const TowerReal& t) const {
  if (kind_ == NormalizerKind::composed) return outer_->eval_unchecked(inner_->eval_unchecked(t));
  return monomial_->eval(t);
}

TowerReal Normalizer::eval(const TowerReal& t) const {
  if (t < domain_start_)
    fail(ErrorKind::domain, name_ + " is defined from " + domain_start_.to_string() + ", got " + t.to_string());
  return eval_unchecked(t);
}

std::optional<long double> Normalizer::try_eval(long double t) const {
  const TowerReal at(t);
  if (at < domain_start_) return std::nullopt;
  return eval_unchecked(at).value();
}

Normalizer Normalizer::restricted(const TowerReal& start) const {
  if (!reaches(start, domain_start_))
    fail(ErrorKind::domain, "cannot restrict " + name_ + " to start " + start.to_string() +
                                " before its domain start " + domain_start_.to_string());
  Normalizer out = *this;
  out.domain_start_ = std::max(start, domain_start_);
  return out;
}

Normalizer builtin(std::string_view name) {
  for (const auto& entry : catalog()) {
    if (entry.name != name) continue;
    Normalizer f;
    f.kind_ = entry.kind;
    f.name_ = std::string(entry.name);
    f.monomial_ = entry.monomial;
    // Smallest T with every iterated log in the formula >= 1: exp^depth(1).
    f.domain_start_ = TowerReal::iterated_exp(entry.monomial.depth(), 1);
    return f;
  }
  std::string valid;
  for (const auto n : builtin_names()) valid += (valid.empty() ? "" : ", ") + std::string(n);
  fail(ErrorKind::catalog, "unknown normalizer '" + std::string(name) + "'; valid names: " + valid);
}

std::span<const std::string_view> builtin_names() {
  static const auto names = make_names();
  return names;
}

Normalizer compose(const Normalizer& f2, const Normalizer& f1) {
  if (f2.kind() != NormalizerKind::second_kind)
    fail(ErrorKind::composition, "outer function " + f2.name() + " is " + std::string(to_string(f2.kind())) +
                                     ", expected second-kind");
  if (f1.kind() != NormalizerKind::first_kind)
    fail(ErrorKind::composition, "inner function " + f1.name() + " is " + std::string(to_string(f1.kind())) +
                                     ", expected first-kind");
  const TowerReal x1 = f1.range_start();
  if (!reaches(x1, f2.domain_start()))
    fail(ErrorKind::composition, "range start x1 = " + x1.to_string() + " of " + f1.name() +
                                     " is below the domain start x2 = " + f2.domain_start().to_string() +
                                     " of " + f2.name());
  Normalizer out;
  out.kind_ = NormalizerKind::composed;
  out.name_ = f2.name() + "(" + f1.name() + ")";
  out.domain_start_ = f1.domain_start();
  out.outer_ = std::make_shared<const Normalizer>(f2);
  out.inner_ = std::make_shared<const Normalizer>(f1);
  return out;
}

long double estimate_L_eta(const Normalizer& f1, long double eta, const TowerReal& t) {
  if (!(eta > 0 && eta <= 1)) fail(ErrorKind::argument, "eta must lie in (0, 1]");
  const TowerReal t_eta = t.pow(eta);
  if (t_eta < f1.domain_start())
    fail(ErrorKind::domain, "T^eta = " + t_eta.to_string() + " precedes the domain start of " + f1.name());
  return ratio(f1.eval(t), f1.eval(t_eta));
}

KindReport check_first_kind(const Normalizer& f, std::span<const TowerReal> grid) {
  require_in_domain(f, grid);
  KindReport r;
  r.normalizer = f.name();
  r.checked_as = NormalizerKind::first_kind;
  r.grid.assign(grid.begin(), grid.end());
  r.monotone = monotone_on(f, grid);
  bool bounded = true;
  for (const auto& t : grid) {
    const TowerReal v = f.eval(t);
    if (v > t.log()) bounded = false;
    r.doubling_ratios.push_back({t, ratio(f.eval(t.scaled(2)), v)});
    for (const long double eta : {0.25L, 0.5L, 0.75L}) {
      if (t.pow(eta) < f.domain_start()) continue;
      r.L_eta_estimates.push_back({eta, t, estimate_L_eta(f, eta, t)});
    }
  }
  r.bounded_by_log = bounded;
  r.doubling_trend = shrinks_toward(ratios_of(r.doubling_ratios, 0), 1);
  return r;
}

KindReport check_second_kind(const Normalizer& f, std::span<const TowerReal> grid) {
  require_in_domain(f, grid);
  static const LogMonomial lower_ref = mono({{0, 1}, {1, -1}});
  static const LogMonomial upper_ref = mono({{0, 1}, {1, 1}, {2, -1}, {3, 1}});
  const TowerReal log3_floor = TowerReal::iterated_exp(2, 1);  // log3 x > 0 past e^e

  KindReport r;
  r.normalizer = f.name();
  r.checked_as = NormalizerKind::second_kind;
  r.grid.assign(grid.begin(), grid.end());
  r.monotone = monotone_on(f, grid);
  for (const auto& x : grid) {
    const TowerReal v = f.eval(x);
    if (x > TowerReal(1)) r.lower_sandwich.push_back({x, ratio(lower_ref.eval(x), v)});
    if (x > log3_floor) r.upper_sandwich.push_back({x, ratio(v, upper_ref.eval(x))});
    for (const long double c : {2.0L, 10.0L}) r.scaling_ratios.push_back({c, x, ratio(f.eval(x.scaled(c)), v.scaled(c))});
  }
  r.lower_trend = shrinks_toward(ratios_of(r.lower_sandwich, 0), 0);
  r.upper_trend = shrinks_toward(ratios_of(r.upper_sandwich, 0), 0);
  r.scaling_trend = shrinks_toward(ratios_of(r.scaling_ratios, 2), 1) &&
                    shrinks_toward(ratios_of(r.scaling_ratios, 10), 1);
  return r;
}

std::vector<TowerReal> default_grid(const Normalizer& f, std::size_t points) {
  std::vector<TowerReal> grid;
  const TowerReal& start = f.domain_start();
  if (points == 0) return grid;
  if (start.height() >= 2 || (start.height() == 1 && start.top() > 9000)) {
    for (std::size_t i = 0; i < points; ++i)
      grid.push_back(TowerReal::iterated_exp(start.height(), start.top() * static_cast<long double>(i + 1)));
    return grid;
  }
  // geometric in log T between max(log start, 3) and 9000
  const long double lo = std::max(3.0L, start.log().value());
  const long double hi = 9000.0L;
  for (std::size_t i = 0; i < points; ++i) {
    const long double frac = points == 1 ? 0 : static_cast<long double>(i) / static_cast<long double>(points - 1);
    const long double log_t = lo * std::pow(hi / lo, frac);
    grid.push_back(i == 0 && start.log().value() >= 3 ? start : TowerReal::iterated_exp(1, log_t));
  }
  return grid;
}

}  // namespace gapkit
