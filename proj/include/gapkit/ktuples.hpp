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

// Disjoint prime tuples with smooth pairwise differences, placed in short
// windows inside (x, y].

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapkit/admissible.hpp"
#include "gapkit/normalizers.hpp"
#include "gapkit/primestore.hpp"

namespace gapkit {

struct PlacementPlan {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::string f2;  // empty when placed at explicit offsets
  std::vector<long double> alphas;
  long double scale = 1.0L;
  std::vector<long double> betas;
  std::vector<Interval> intervals;
};

/// floor(x / log x), natural log.
std::uint64_t interval_width(std::uint64_t x);

/// Interval i is (x + v_i, x + v_i + floor(x/log x)] with
/// v_i = floor(alpha_i * scale * f2(x)).
PlacementPlan place_intervals(std::uint64_t x, std::uint64_t y, const Normalizer& f2,
                              std::span<const long double> alphas, long double scale);

/// Same windows at integer offsets v_i.
PlacementPlan place_intervals_at(std::uint64_t x, std::uint64_t y, std::span<const std::uint64_t> offsets);

/// The integer D with y/x <= D < 1 + y/x.
std::uint64_t compute_D(std::uint64_t x, std::uint64_t y);

/// C * L_eta, with L_eta estimated as f1(x) / f1(x^eta).
long double estimate_scale(const Normalizer& f1, long double eta, long double c, std::uint64_t x);

struct TuplePlan {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t D = 0;
  std::vector<Interval> intervals;
  std::vector<Tuple> sets;
  std::vector<std::uint64_t> sizes;
  Tuple all;
  std::vector<std::string> warnings;
};

/// Greedy: for each interval, the smallest unused primes = 1 (mod D).
TuplePlan construct_tuples(const PrimeStore& store, const PlacementPlan& plan, std::span<const std::uint64_t> sizes,
                           std::uint64_t D);

struct SmoothReport {
  bool smooth = true;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> b;
  std::uint64_t factor = 0;  // first prime factor above the bound
};

SmoothReport verify_smooth_differences(const Tuple& t, std::uint64_t bound);

std::vector<Tuple> partition_equal(const Tuple& t, std::size_t m);

}  // namespace gapkit
