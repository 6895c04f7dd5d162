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

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gapkit/tower.hpp"

namespace gapkit {

enum class NormalizerKind { first_kind, second_kind, composed, raw };

std::string_view to_string(NormalizerKind kind);

/// prod_k log_k(T)^exponents[k], with log_0 T = T.
struct LogMonomial {
  std::array<long double, 7> exponents{};

  /// Deepest iterated log with a nonzero exponent (0 if only T itself).
  int depth() const noexcept;
  TowerReal eval(const TowerReal& t) const;
};

/// A normalizing function: a catalog monomial, possibly restricted to a later
/// domain start, or the composition f2(f1(T)) of a second-kind and a
/// first-kind normalizer. Immutable value type.
class Normalizer {
 public:
  NormalizerKind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const TowerReal& domain_start() const noexcept { return domain_start_; }

  /// Throws a domain error for t below domain_start().
  TowerReal eval(const TowerReal& t) const;
  long double eval(long double t) const { return eval(TowerReal(t)).value(); }
  /// Empty below the domain, for gap normalization.
  std::optional<long double> try_eval(long double t) const;

  /// f(domain_start()).
  TowerReal range_start() const { return eval_unchecked(domain_start_); }

  /// The same function on [start, inf). start must not precede the current
  /// domain start.
  Normalizer restricted(const TowerReal& start) const;

  /// Components of a composed normalizer (outer = f2, inner = f1).
  const Normalizer* outer() const noexcept { return outer_.get(); }
  const Normalizer* inner() const noexcept { return inner_.get(); }

  /// Catalog descriptor: the monomial for builtins, empty for composed.
  const std::optional<LogMonomial>& monomial() const noexcept { return monomial_; }

 private:
  friend Normalizer builtin(std::string_view name);
  friend Normalizer compose(const Normalizer& f2, const Normalizer& f1);

  TowerReal eval_unchecked(const TowerReal& t) const;

  NormalizerKind kind_ = NormalizerKind::raw;
  std::string name_;
  TowerReal domain_start_{1};
  std::optional<LogMonomial> monomial_;
  std::shared_ptr<const Normalizer> outer_;
  std::shared_ptr<const Normalizer> inner_;
};

/// Catalog lookup. Names: log, log2, log3, log6, sqrt_log,
/// log2_over_sqrt_log3, log_pow_7_9, R, R1, R1_log5 and the second-kind
/// entries x, x_log_over_log2, x_over_log, x_sq.
Normalizer builtin(std::string_view name);
std::span<const std::string_view> builtin_names();

/// f2 o f1, defined on f1's domain. f1's range start must reach f2's domain.
Normalizer compose(const Normalizer& f2, const Normalizer& f1);

/// f1(T) / f1(T^eta): a finite-T sample of the limit L_eta.
long double estimate_L_eta(const Normalizer& f1, long double eta, const TowerReal& t);

struct RatioSample {
  TowerReal at;
  long double ratio = 0;
};

struct ParamRatioSample {
  long double param = 0;  // eta for L_eta samples, C for scaling samples
  TowerReal at;
  long double ratio = 0;
};

/// Finite-grid evidence for the first-kind / second-kind axioms. Reports
/// trends on the sample grid only; it never asserts that a limit exists.
struct KindReport {
  std::string normalizer;
  NormalizerKind checked_as = NormalizerKind::first_kind;
  std::vector<TowerReal> grid;
  bool monotone = false;

  // first kind
  std::optional<bool> bounded_by_log;
  std::vector<RatioSample> doubling_ratios;
  std::vector<ParamRatioSample> L_eta_estimates;
  bool doubling_trend = false;  // |f(2T)/f(T) - 1| shrinking along the grid

  // second kind
  std::vector<RatioSample> lower_sandwich;  // (x / log x) / f(x)
  std::vector<RatioSample> upper_sandwich;  // f(x) / (x log x log3 x / log2 x)
  std::vector<ParamRatioSample> scaling_ratios;
  bool lower_trend = false;
  bool upper_trend = false;
  bool scaling_trend = false;
};

KindReport check_first_kind(const Normalizer& f, std::span<const TowerReal> grid);
KindReport check_second_kind(const Normalizer& f, std::span<const TowerReal> grid);

/// `points` ascending values from the domain start outward, spaced
/// geometrically in log T.
std::vector<TowerReal> default_grid(const Normalizer& f, std::size_t points = 12);

}  // namespace gapkit
