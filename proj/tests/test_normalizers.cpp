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

#include <cmath>

#include "gapkit/error.hpp"
#include "gapkit/normalizers.hpp"

using namespace gapkit;

namespace {

const long double kE = std::exp(1.0L);

TowerReal tower(int h, long double top) { return TowerReal::iterated_exp(h, top); }

bool near(long double a, long double b, long double rel) { return std::fabs(a - b) <= rel * std::fabs(b); }

}  // namespace

TEST_CASE("tower reals") {
  CHECK(tower(1, 1).value() == doctest::Approx(static_cast<double>(kE)));
  CHECK(tower(4, 1).height() > 0);
  CHECK(tower(4, 1).log() == tower(3, 1));
  CHECK(tower(3, 1) < tower(4, 1));
  CHECK(TowerReal(5) < TowerReal(7));
  CHECK(TowerReal::parse(tower(5, 1).to_string()) == tower(5, 1));
  CHECK(TowerReal::parse("123.5").value() == 123.5L);
  CHECK(TowerReal(2).pow(1) == TowerReal(2));
}

TEST_CASE("catalog values at tower points") {
  const auto r1 = builtin("R1");
  CHECK(near(r1.eval(tower(3, 1)).value(), std::exp(kE + 1), 1e-15L));
  CHECK(near(r1.eval(tower(3, 1)).value(), 41.193L, 1e-4L));
  CHECK(builtin("log").eval(kE) == doctest::Approx(1.0));

  // log4 T = 1, log3 T = e
  const auto t = tower(4, 1);
  const long double log_t = tower(3, 1).value();
  const long double log2_t = tower(2, 1).value();
  CHECK(near(builtin("R").eval(t).value(), log_t * log2_t / (kE * kE), 1e-15L));
  CHECK(builtin("R").domain_start() == tower(4, 1));
  CHECK(builtin("log6").domain_start() == tower(6, 1));
  CHECK(builtin("R1_log5").domain_start() == tower(5, 1));
  CHECK(builtin("log3").domain_start() == tower(3, 1));
  CHECK(builtin("sqrt_log").domain_start() == tower(1, 1));

  try {
    builtin("nope");
    FAIL("expected catalog error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::catalog);
    CHECK(std::string(e.what()).find("R1_log5") != std::string::npos);
  }
  CHECK_THROWS_AS(builtin("log3").eval(10.0L), Error);
  CHECK_FALSE(builtin("log3").try_eval(10.0L).has_value());
}

TEST_CASE("every catalog entry increases on its grid") {
  for (const auto name : builtin_names()) {
    const auto f = builtin(name);
    const auto grid = default_grid(f, 40);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      REQUIRE_MESSAGE(grid[i - 1] < grid[i], name);
      CHECK_MESSAGE(f.eval(grid[i - 1]) < f.eval(grid[i]), name);
    }
    for (const auto& t : grid) CHECK_MESSAGE(estimate_L_eta(f, 1, t) == 1.0L, name);
  }
}

TEST_CASE("composition") {
  const auto f2 = builtin("x_log_over_log2");
  const auto f1 = builtin("log").restricted(tower(3, 1));
  const auto f = compose(f2, f1);
  CHECK(f.kind() == NormalizerKind::composed);
  CHECK(f.domain_start() == f1.domain_start());
  CHECK(f.outer()->name() == "x_log_over_log2");
  CHECK(f.inner()->name() == "log");

  const auto r1 = builtin("R1");
  const long double lo = std::log(tower(3, 1).value());
  const long double hi = std::log(1e300L);
  for (int i = 0; i < 100; ++i) {
    const long double t = std::exp(lo + (hi - lo) * i / 99);
    const long double a = f.eval(t);
    const long double b = r1.eval(t);
    CHECK(near(a, b, 1e-12L));
    CHECK(a == f2.eval(f1.eval(t)));
  }

  // identity-like outer function gives back log itself
  const auto plain = compose(builtin("x"), builtin("log"));
  CHECK(plain.eval(1e50L) == doctest::Approx(static_cast<double>(std::log(1e50L))));

  try {
    compose(f2, builtin("log"));
    FAIL("expected composition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::composition);
  }
  CHECK_THROWS_AS(compose(builtin("log"), builtin("log")), Error);
}

TEST_CASE("L_eta estimates") {
  const auto log = builtin("log");
  for (const long double t : {1e3L, 1e10L, 1e100L}) CHECK(estimate_L_eta(log, 0.5L, t) == doctest::Approx(2.0));
  const auto log2 = builtin("log2");
  const long double t = 1e100L;
  const long double expect = 1 + std::log(2.0L) / std::log(std::log(std::sqrt(t)));
  CHECK(near(estimate_L_eta(log2, 0.5L, t), expect, 1e-15L));
  CHECK_THROWS_AS(estimate_L_eta(log, 0, t), Error);
  CHECK_THROWS_AS(estimate_L_eta(builtin("log3"), 0.5L, 2e7L), Error);  // sqrt(2e7) < e^e^e
}

TEST_CASE("first-kind diagnostics") {
  const auto log = builtin("log");
  const auto rep = check_first_kind(log, default_grid(log));
  CHECK(rep.monotone);
  CHECK(rep.bounded_by_log == true);
  CHECK(rep.doubling_trend);
  CHECK(rep.doubling_ratios.size() == rep.grid.size());
  for (const auto& s : rep.L_eta_estimates) CHECK(s.ratio == doctest::Approx(static_cast<double>(1 / s.param)));

  const auto r1 = builtin("R1");
  CHECK(check_first_kind(r1, default_grid(r1)).bounded_by_log == false);
  const auto sq = builtin("sqrt_log");
  CHECK(check_first_kind(sq, default_grid(sq)).bounded_by_log == true);

  const std::vector<TowerReal> bad{TowerReal(1.5L)};
  CHECK_THROWS_AS(check_first_kind(log, bad), Error);
}

TEST_CASE("second-kind diagnostics") {
  const auto f = builtin("x_log_over_log2");
  const std::vector<TowerReal> grid{TowerReal(1e6L), TowerReal(1e12L), TowerReal(1e24L)};
  const auto rep = check_second_kind(f, grid);
  CHECK(rep.monotone);
  CHECK(rep.lower_trend);
  CHECK(rep.upper_trend);
  CHECK(rep.scaling_trend);
  for (const auto& s : rep.scaling_ratios) CHECK(std::fabs(s.ratio - 1) < 0.2L);

  const auto xl = check_second_kind(builtin("x_over_log"), grid);
  for (const auto& s : xl.lower_sandwich) CHECK(s.ratio == doctest::Approx(1.0));
  CHECK_FALSE(xl.lower_trend);

  const auto sq = check_second_kind(builtin("x_sq"), grid);
  for (const auto& s : sq.scaling_ratios) CHECK(s.ratio == doctest::Approx(static_cast<double>(s.param)));
  CHECK_FALSE(sq.scaling_trend);
}
