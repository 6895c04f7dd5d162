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

// Serial vs OpenMP kernel timings.
//   bench_kernels [--hi N] [--threads T] [--reps R]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "gapkit/kernels.hpp"
#include "gapkit/primestore.hpp"

using namespace gapkit;

namespace {

double best_of(int reps, const std::function<std::uint64_t()>& fn, std::uint64_t& result) {
  double best = 1e30;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    result = fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, int reps, const std::function<std::uint64_t()>& serial,
         const std::function<std::uint64_t()>& parallel) {
  std::uint64_t a = 0, b = 0;
  const double ts = best_of(reps, serial, a);
  const double tp = best_of(reps, parallel, b);
  std::printf("%-14s serial %9.4f s  omp %9.4f s  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
              a == b ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t hi = 100000000;
  int threads = 0, reps = 3;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (!std::strcmp(argv[i], "--hi")) hi = std::strtoull(argv[i + 1], nullptr, 10);
    else if (!std::strcmp(argv[i], "--threads")) threads = std::atoi(argv[i + 1]);
    else if (!std::strcmp(argv[i], "--reps")) reps = std::atoi(argv[i + 1]);
  }
  if (threads <= 0) threads = kernels::default_threads();
  const std::uint64_t seg = std::uint64_t{1} << 18;
  const auto store = PrimeStore::build(hi);
  const auto base = store.base_primes();
  std::printf("hi = %llu, threads = %d, reps = %d\n", static_cast<unsigned long long>(hi), threads, reps);

  row("sieve", reps, [&] { return kernels::serial::primes_in(base, 2, hi, seg).size(); },
      [&] { return kernels::omp::primes_in(base, 2, hi, seg, threads).size(); });
  row("count", reps, [&] { return kernels::serial::count_primes(base, 2, hi, seg); },
      [&] { return kernels::omp::count_primes(base, 2, hi, seg, threads); });
  const std::uint64_t shi = std::min<std::uint64_t>(hi, 10000000);
  row("count_smooth", reps, [&] { return kernels::serial::count_smooth(base, 2, shi, 1000, seg); },
      [&] { return kernels::omp::count_smooth(base, 2, shi, 1000, seg, threads); });

  std::vector<ResidueClass> classes;
  for (const auto p : store.primes_in({1, 2000})) classes.push_back({p, (p * 7 + 3) % p});
  row("sift", reps, [&] { return static_cast<std::uint64_t>(kernels::serial::sift(0, hi, classes).count()); },
      [&] { return static_cast<std::uint64_t>(kernels::omp::sift(0, hi, classes, threads).count()); });
  return 0;
}
