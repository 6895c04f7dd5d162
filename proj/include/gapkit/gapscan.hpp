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

// Consecutive prime gaps, optionally normalized, and the reducers built on
// the ordered gap stream.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gapkit/normalizers.hpp"
#include "gapkit/primestore.hpp"

namespace gapkit {

struct GapRecord {
  std::uint64_t p = 0;
  std::uint64_t d = 0;
  std::optional<long double> normalized;  // d / f(p), absent below f's domain

  friend bool operator==(const GapRecord&, const GapRecord&) = default;
};

struct ChainRecord {
  std::uint64_t start_index = 0;
  std::vector<GapRecord> gaps;
};

using GapSink = std::function<void(const GapRecord&)>;

/// One record per prime p < limit whose successor is <= store.limit(),
/// ascending.
void scan_gaps(const PrimeStore& store, std::uint64_t limit, const Normalizer* f, const GapSink& sink);
std::vector<GapRecord> collect_gaps(const PrimeStore& store, std::uint64_t limit, const Normalizer* f = nullptr);

/// Mean of d_n / log p_n over the gaps with p_{n+1} <= limit.
long double average_normalized(const PrimeStore& store, std::uint64_t limit);

struct CramerBin {
  long double empirical = 0;
  long double model = 0;  // e^-a - e^-b
};

/// Fraction of the gaps with p_{n+1} <= limit having a < d/log p <= b.
CramerBin cramer_bin_fraction(const PrimeStore& store, std::uint64_t limit, long double a, long double b);

struct Bin {
  long double lo = 0;
  long double hi = 0;
  std::uint64_t count = 0;
};

struct Histogram {
  std::vector<Bin> bins;
  Bin overflow;  // values > x_max; hi is +inf
  std::uint64_t total() const;
};

Histogram histogram(const PrimeStore& store, std::uint64_t limit, const Normalizer& f, long double bin_width,
                    long double x_max);

using ChainSink = std::function<void(const ChainRecord&)>;

/// Windows of `a` consecutive records of the normalized stream.
void chains(const PrimeStore& store, std::uint64_t limit, const Normalizer& f, std::size_t a, const ChainSink& sink);

struct DifferenceHit {
  std::size_t i = 0;
  std::size_t j = 0;
  GapRecord witness;
};

/// For each i < j, the first record with |normalized - (alpha_j - alpha_i)|
/// <= tol. Empirical illustration only.
std::vector<DifferenceHit> difference_hits(const PrimeStore& store, std::uint64_t limit, const Normalizer& f,
                                           std::span<const long double> alphas, long double tol);

struct ThetaConstants {
  mpq_class theta;
  std::uint64_t m = 0;  // ceil(2 / theta)
  std::uint64_t bucket_size = 0;
  mpq_class c1;
  mpq_class c2;
};

ThetaConstants theta_constants(const mpq_class& theta);

}  // namespace gapkit
