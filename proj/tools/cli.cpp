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

#include "cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "gapkit/covering.hpp"
#include "gapkit/error.hpp"
#include "gapkit/gapscan.hpp"
#include "gapkit/json_io.hpp"
#include "gapkit/ktuples.hpp"
#include "gapkit/normalizers.hpp"
#include "gapkit/primestore.hpp"

namespace gapkit::cli {

namespace {

constexpr int kNotFound = 3;

struct NotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num17(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(v));
  return buf;
}

Normalizer resolve_normalizer(const std::string& name) {
  const auto open = name.find('(');
  if (open != std::string::npos && name.back() == ')')
    return compose(builtin(name.substr(0, open)), builtin(name.substr(open + 1, name.size() - open - 2)));
  return builtin(name);
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    if (q.set_str(text, 10) != 0) fail(ErrorKind::argument, "bad rational '" + text + "'");
  } else {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    mpz_class num, den = 1;
    if (digits.empty() || num.set_str(digits, 10) != 0) fail(ErrorKind::argument, "bad decimal '" + text + "'");
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    q = mpq_class(num, den);
  }
  q.canonicalize();
  return q;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::argument, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::argument, path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) fail(ErrorKind::argument, "cannot write " + path);
  file << text;
}

std::uint64_t pick_seed(const CLI::Option* opt, std::uint64_t given, std::ostream& err) {
  if (opt->count()) return given;
  std::random_device rd;
  const std::uint64_t seed = (std::uint64_t{rd()} << 32) ^ rd();
  err << "seed: " << seed << "\n";
  return seed;
}

PrimeStore store_to(std::uint64_t limit, int threads) {
  StoreOptions options;
  options.threads = threads;
  return PrimeStore::build(std::max<std::uint64_t>(limit, 2), std::uint64_t{1} << 18, options);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gapkit: prime gap scans, covering constructions and normalized-gap tools"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  int threads = 0;
  std::uint64_t limit = 0;
  std::string normalizer = "log";
  std::string csv;
  std::string out_path;
  std::uint64_t seed = 0;

  // sieve
  auto* sieve = app.add_subcommand("sieve", "count primes up to --limit; --csv writes the list");
  sieve->add_option("--limit", limit)->required();
  sieve->add_option("--csv", csv);
  sieve->add_option("--threads", threads);

  // gaps
  auto* gaps = app.add_subcommand("gaps", "stream p,d,normalized for primes below --limit");
  gaps->add_option("--limit", limit)->required();
  gaps->add_option("--normalizer", normalizer);
  gaps->add_option("--csv", csv);
  gaps->add_option("--threads", threads);

  // hist
  std::size_t bins = 20;
  double x_max = 4;
  auto* hist = app.add_subcommand("hist", "histogram of normalized gaps: --bins equal bins on [0, --x-max]");
  hist->add_option("--limit", limit)->required();
  hist->add_option("--normalizer", normalizer);
  hist->add_option("--bins", bins);
  hist->add_option("--x-max", x_max);
  hist->add_option("--csv", csv);
  hist->add_option("--threads", threads);

  // chains
  std::size_t chain_len = 2;
  auto* chain = app.add_subcommand("chains", "windows of --a consecutive normalized gaps");
  chain->add_option("--limit", limit)->required();
  chain->add_option("--normalizer", normalizer);
  chain->add_option("--a", chain_len);
  chain->add_option("--csv", csv);
  chain->add_option("--threads", threads);

  // diff-hits
  std::vector<double> alphas;
  double tol = 0.05;
  auto* diff = app.add_subcommand("diff-hits", "empirical witnesses: first gap near each alpha_j - alpha_i");
  diff->add_option("--limit", limit)->required();
  diff->add_option("--normalizer", normalizer);
  diff->add_option("--alphas", alphas)->delimiter(',')->required();
  diff->add_option("--tol", tol);
  diff->add_option("--csv", csv);
  diff->add_option("--threads", threads);

  // constants
  std::string theta;
  auto* constants = app.add_subcommand("constants", "bucket size, c1, c2 for a level of distribution theta");
  constants->add_option("--theta", theta)->required();

  // cover
  std::uint64_t x = 0, y = 0, z = 0, s_lo = 0, p_lo = 0, c_cap = 64;
  double c_const = 1;
  std::string profile = "toy", strategy = "greedy", h_plan, z_file;
  std::vector<std::uint64_t> h;
  auto* cover = app.add_subcommand("cover", "sift (x, y] down to H and emit a certificate");
  cover->add_option("--x", x)->required();
  auto* y_opt = cover->add_option("--y", y);
  cover->add_option("--c-const", c_const);
  cover->add_option("--profile", profile);
  auto* h_opt = cover->add_option("--h", h)->delimiter(',');
  auto* plan_opt = cover->add_option("--h-from-plan", h_plan);
  h_opt->excludes(plan_opt);
  cover->add_option("--z-file", z_file);
  cover->add_option("--strategy", strategy);
  auto* cover_seed = cover->add_option("--seed", seed);
  cover->add_option("--c-cap", c_cap);
  auto* z_opt = cover->add_option("--z", z, "toy profile: upper end of the S-stage");
  auto* s_lo_opt = cover->add_option("--s-lo", s_lo, "toy profile: lower end of the S-stage");
  auto* p_lo_opt = cover->add_option("--p-lo", p_lo, "toy profile: lower end of the P-stage");
  cover->add_option("--out", out_path);
  cover->add_option("--threads", threads);

  // corridor
  std::string cert_path;
  std::uint64_t k_min = 1, k_max = 1000000;
  unsigned mr_rounds = kDefaultRounds;
  auto* corridor = app.add_subcommand("corridor", "CRT-assemble a certificate and search n = b + kW");
  corridor->add_option("--cert", cert_path)->required();
  corridor->add_option("--k-min", k_min);
  corridor->add_option("--k-max", k_max);
  corridor->add_option("--mr-rounds", mr_rounds);
  auto* corridor_seed = corridor->add_option("--seed", seed);
  corridor->add_option("--out", out_path);
  corridor->add_option("--threads", threads);

  // tuple
  std::string f2_name = "x_log_over_log2";
  std::vector<double> betas;
  std::vector<std::uint64_t> sizes, offsets;
  double scale = 1;
  auto* tuple = app.add_subcommand("tuple", "disjoint prime sets with x-smooth differences in windows of (x, y]");
  tuple->add_option("--x", x)->required();
  tuple->add_option("--y", y)->required();
  tuple->add_option("--normalizer", f2_name, "second-kind f2 for window offsets");
  auto* t_alpha = tuple->add_option("--alphas", alphas)->delimiter(',');
  auto* t_beta = tuple->add_option("--betas", betas)->delimiter(',');
  auto* t_offset = tuple->add_option("--offsets", offsets, "integer window offsets v_i")->delimiter(',');
  t_alpha->excludes(t_beta)->excludes(t_offset);
  t_beta->excludes(t_offset);
  tuple->add_option("--scale", scale);
  tuple->add_option("--sizes", sizes)->delimiter(',')->required();
  tuple->add_option("--out", out_path);
  tuple->add_option("--threads", threads);

  // check-normalizer
  std::string kind;
  auto* check = app.add_subcommand("check-normalizer", "numerical first/second-kind diagnostics");
  check->add_option("--normalizer", normalizer)->required();
  check->add_option("--kind", kind)->check(CLI::IsMember({"first", "second"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << app.help();
    return 1;
  }

  try {
    if (threads > 0) omp_set_num_threads(threads);
    std::ostringstream text;

    if (*sieve) {
      const auto store = store_to(limit, threads);
      text << "pi(" << limit << ") = " << store.count_primes(limit) << "\n";
      out << text.str();
      if (!csv.empty()) {
        std::ostringstream list;
        list << "p\n";
        store.for_each_prime({1, limit}, [&](std::uint64_t p) { list << p << "\n"; });
        emit(list.str(), csv, out);
      }
      return 0;
    }

    if (*gaps) {
      const auto f = resolve_normalizer(normalizer);
      const auto store = store_to(limit, threads);
      err << "scanning gaps below " << limit << "\n";
      std::uint64_t rows = 0;
      text << "p,d,normalized\n";
      scan_gaps(store, limit, &f, [&](const GapRecord& r) {
        text << r.p << ',' << r.d << ',' << (r.normalized ? num17(*r.normalized) : "") << '\n';
        ++rows;
      });
      emit(text.str(), csv, out);
      err << rows << " records\n";
      return 0;
    }

    if (*hist) {
      if (bins == 0) fail(ErrorKind::argument, "--bins must be positive");
      const auto f = resolve_normalizer(normalizer);
      const auto store = store_to(limit, threads);
      const auto hg = histogram(store, limit, f, static_cast<long double>(x_max) / bins, x_max);
      text << "bin_lo,bin_hi,count\n";
      for (const auto& b : hg.bins) text << num17(b.lo) << ',' << num17(b.hi) << ',' << b.count << '\n';
      text << num17(hg.overflow.lo) << ",inf," << hg.overflow.count << '\n';
      emit(text.str(), csv, out);
      return 0;
    }

    if (*chain) {
      const auto f = resolve_normalizer(normalizer);
      const auto store = store_to(limit, threads);
      text << "start_index,p";
      for (std::size_t i = 1; i <= chain_len; ++i) text << ",normalized_" << i;
      text << '\n';
      chains(store, limit, f, chain_len, [&](const ChainRecord& c) {
        text << c.start_index << ',' << c.gaps.front().p;
        for (const auto& g : c.gaps) text << ',' << (g.normalized ? num17(*g.normalized) : "");
        text << '\n';
      });
      emit(text.str(), csv, out);
      return 0;
    }

    if (*diff) {
      const auto f = resolve_normalizer(normalizer);
      const auto store = store_to(limit, threads);
      const std::vector<long double> a(alphas.begin(), alphas.end());
      err << "difference hits are empirical witnesses, not limit-point proofs\n";
      text << "i,j,target,p,d,normalized\n";
      for (const auto& hit : difference_hits(store, limit, f, a, tol))
        text << hit.i << ',' << hit.j << ',' << num17(a[hit.j] - a[hit.i]) << ',' << hit.witness.p << ','
             << hit.witness.d << ',' << num17(*hit.witness.normalized) << '\n';
      emit(text.str(), csv, out);
      return 0;
    }

    if (*constants) {
      const auto tc = theta_constants(parse_rational(theta));
      nlohmann::json j{{"theta", tc.theta.get_str()},
                       {"bucket_size", tc.bucket_size},
                       {"c1", tc.c1.get_str()},
                       {"c2", tc.c2.get_str()},
                       {"c1_decimal", tc.c1.get_d()},
                       {"c2_decimal", tc.c2.get_d()}};
      out << j.dump(2) << "\n";
      if (tc.theta > mpq_class(1, 2)) err << "note: theta > 1/2 is beyond the unconditional level of distribution\n";
      return 0;
    }

    if (*cover) {
      const Profile prof = parse_profile(profile);
      ParamOverrides overrides;
      if (prof == Profile::paper && (y_opt->count() || z_opt->count() || s_lo_opt->count() || p_lo_opt->count()))
        fail(ErrorKind::argument, "--y, --z, --s-lo and --p-lo apply to the toy profile only");
      if (y_opt->count()) overrides.y = y;
      if (z_opt->count()) overrides.z = z;
      if (s_lo_opt->count()) overrides.s_lo = s_lo;
      if (p_lo_opt->count()) overrides.p_lo = p_lo;
      const Params params = plan_parameters(x, c_const, prof, overrides);
      for (const auto& w : params.warnings) err << "warning: " << w << "\n";

      Tuple hset;
      if (plan_opt->count()) {
        hset = json_io::tuple_from_plan_json(read_json(h_plan));
      } else {
        hset = Tuple(std::vector<std::int64_t>(h.begin(), h.end()));
      }
      CoverOptions options;
      options.strategy = parse_strategy(strategy);
      options.seed = pick_seed(cover_seed, seed, err);
      options.c_cap = c_cap;
      if (!z_file.empty()) options.excluded = json_io::repulsive_from_json(read_json(z_file));

      const auto store = store_to(std::max(params.y, c_cap * params.x), threads);
      const auto cert = build_cover(store, params, hset, options);
      err << "cover: " << cert.classes.size() << " classes, C x = " << cert.c_upper << "\n";
      emit(json_io::to_json(cert).dump(2) + "\n", out_path, out);
      return 0;
    }

    if (*corridor) {
      const auto cert = json_io::certificate_from_json(read_json(cert_path));
      const std::uint64_t s = pick_seed(corridor_seed, seed, err);
      const auto witness = find_corridor(cert, k_min, k_max, mr_rounds, s);
      if (!witness) throw NotFound("no corridor for k in [" + std::to_string(k_min) + ", " + std::to_string(k_max) + "]");
      const auto verdict = verify_corridor(*witness, cert);
      if (!verdict.ok) fail(ErrorKind::integrity, "witness failed re-verification: " + verdict.problems.front());
      err << "corridor: k = " << witness->k << "\n";
      emit(json_io::to_json(*witness).dump(2) + "\n", out_path, out);
      return 0;
    }

    if (*tuple) {
      PlacementPlan plan;
      if (t_offset->count()) {
        plan = place_intervals_at(x, y, offsets);
      } else {
        const auto f2 = resolve_normalizer(f2_name);
        std::vector<long double> a;
        long double sc = scale;
        if (t_beta->count()) {
          a.assign(betas.begin(), betas.end());
          sc = 1;
        } else if (t_alpha->count()) {
          a.assign(alphas.begin(), alphas.end());
        } else {
          fail(ErrorKind::argument, "one of --alphas, --betas or --offsets is required");
        }
        plan = place_intervals(x, y, f2, a, sc);
      }
      if (sizes.size() == 1 && plan.intervals.size() > 1) sizes.assign(plan.intervals.size(), sizes.front());
      const auto store = store_to(y, threads);
      const auto tp = construct_tuples(store, plan, sizes, compute_D(x, y));
      for (const auto& w : tp.warnings) err << "warning: " << w << "\n";
      emit(json_io::to_json(tp).dump(2) + "\n", out_path, out);
      return 0;
    }

    if (*check) {
      const auto f = resolve_normalizer(normalizer);
      bool first = f.kind() == NormalizerKind::first_kind;
      if (!kind.empty()) {
        first = kind == "first";
      } else if (f.kind() != NormalizerKind::first_kind && f.kind() != NormalizerKind::second_kind) {
        fail(ErrorKind::argument, f.name() + " is " + std::string(to_string(f.kind())) + "; pass --kind first|second");
      }
      const auto grid = default_grid(f);
      const auto report = first ? check_first_kind(f, grid) : check_second_kind(f, grid);
      out << json_io::to_json(report).dump(2) << "\n";
      return 0;
    }
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << "\n";
    return kNotFound;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::capacity ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace gapkit::cli
