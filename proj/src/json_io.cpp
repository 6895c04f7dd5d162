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

#include "gapkit/json_io.hpp"

#include <limits>
#include <string>

#include "gapkit/error.hpp"

namespace gapkit::json_io {

namespace {

constexpr std::uint64_t kSafeInteger = std::uint64_t{1} << 53;

mpz_class decode_mpz(const json& j) {
  if (!j.is_string()) fail(ErrorKind::argument, "big integer must be a decimal string");
  mpz_class v;
  if (v.set_str(j.get<std::string>(), 10) != 0) fail(ErrorKind::argument, "bad decimal integer");
  return v;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::argument, std::string("missing field '") + key + "'");
  return j.at(key);
}

json tower_json(const TowerReal& t) {
  if (t.finite() && t.value() <= std::numeric_limits<double>::max()) return static_cast<double>(t.value());
  return t.to_string();
}

}  // namespace

json encode_uint(std::uint64_t v) {
  if (v > kSafeInteger) return std::to_string(v);
  return v;
}

std::uint64_t decode_uint(const json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::uint64_t>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == s.size() && !s.empty() && s[0] != '-') return v;
  }
  fail(ErrorKind::argument, "expected a nonnegative integer, got " + j.dump());
}

json to_json(const CoverCertificate& cert) {
  json classes = json::array();
  for (const auto& rc : cert.classes) classes.push_back({encode_uint(rc.p), encode_uint(rc.c)});
  json h = json::array();
  for (const auto q : cert.h) h.push_back(encode_uint(static_cast<std::uint64_t>(q)));
  json excluded = json::array();
  for (const auto p : cert.excluded.primes) excluded.push_back(encode_uint(p));
  return json{{"version", 1},
              {"profile", std::string(to_string(cert.profile))},
              {"x", encode_uint(cert.x)},
              {"y", encode_uint(cert.y)},
              {"c_upper", encode_uint(cert.c_upper)},
              {"h", h},
              {"excluded", excluded},
              {"excluded_c", static_cast<double>(cert.excluded.witness_constant)},
              {"strategy", std::string(to_string(cert.strategy))},
              {"seed", std::to_string(cert.seed)},
              {"classes", classes}};
}

CoverCertificate certificate_from_json(const json& j) {
  if (decode_uint(field(j, "version")) != 1) fail(ErrorKind::argument, "unsupported certificate version");
  CoverCertificate cert;
  cert.profile = parse_profile(field(j, "profile").get<std::string>());
  cert.x = decode_uint(field(j, "x"));
  cert.y = decode_uint(field(j, "y"));
  cert.c_upper = decode_uint(field(j, "c_upper"));
  std::vector<std::int64_t> h;
  for (const auto& q : field(j, "h")) h.push_back(static_cast<std::int64_t>(decode_uint(q)));
  cert.h = Tuple(std::move(h));
  for (const auto& p : field(j, "excluded")) cert.excluded.primes.push_back(decode_uint(p));
  if (j.contains("excluded_c")) cert.excluded.witness_constant = j.at("excluded_c").get<double>();
  cert.strategy = parse_strategy(field(j, "strategy").get<std::string>());
  cert.seed = decode_uint(field(j, "seed"));
  for (const auto& rc : field(j, "classes")) {
    if (!rc.is_array() || rc.size() != 2) fail(ErrorKind::argument, "class entries must be [p, c]");
    cert.classes.push_back({decode_uint(rc[0]), decode_uint(rc[1])});
  }
  return cert;
}

json to_json(const CorridorWitness& w) {
  json primes = json::array();
  for (const auto& po : w.prime_offsets) primes.push_back({encode_uint(po.q), std::string(to_string(po.verdict))});
  json composites = json::array();
  for (const auto& co : w.composite_offsets) composites.push_back({encode_uint(co.t), encode_uint(co.p)});
  return json{{"version", 1},
              {"W", w.W.get_str()},
              {"b", w.b.get_str()},
              {"k", std::to_string(w.k)},
              {"n", w.n.get_str()},
              {"x", encode_uint(w.x)},
              {"y", encode_uint(w.y)},
              {"mr_rounds", w.mr_rounds},
              {"seed", std::to_string(w.seed)},
              {"prime_offsets", primes},
              {"composite_offsets", composites}};
}

CorridorWitness witness_from_json(const json& j) {
  CorridorWitness w;
  w.W = decode_mpz(field(j, "W"));
  w.b = decode_mpz(field(j, "b"));
  w.k = decode_uint(field(j, "k"));
  w.n = decode_mpz(field(j, "n"));
  w.x = decode_uint(field(j, "x"));
  w.y = decode_uint(field(j, "y"));
  w.mr_rounds = static_cast<unsigned>(decode_uint(field(j, "mr_rounds")));
  w.seed = decode_uint(field(j, "seed"));
  for (const auto& e : field(j, "prime_offsets")) {
    if (!e.is_array() || e.size() != 2) fail(ErrorKind::argument, "prime_offsets entries must be [q, verdict]");
    w.prime_offsets.push_back({decode_uint(e[0]), parse_verdict(e[1].get<std::string>())});
  }
  for (const auto& e : field(j, "composite_offsets")) {
    if (!e.is_array() || e.size() != 2) fail(ErrorKind::argument, "composite_offsets entries must be [t, p]");
    w.composite_offsets.push_back({decode_uint(e[0]), decode_uint(e[1])});
  }
  return w;
}

json to_json(const TuplePlan& plan) {
  json intervals = json::array();
  for (const auto& iv : plan.intervals) intervals.push_back({encode_uint(iv.lo), encode_uint(iv.hi)});
  json sets = json::array();
  for (const auto& s : plan.sets) {
    json one = json::array();
    for (const auto v : s) one.push_back(encode_uint(static_cast<std::uint64_t>(v)));
    sets.push_back(one);
  }
  return json{{"x", encode_uint(plan.x)}, {"y", encode_uint(plan.y)}, {"D", encode_uint(plan.D)},
              {"intervals", intervals}, {"sets", sets}};
}

Tuple tuple_from_plan_json(const json& j) {
  std::vector<std::int64_t> all;
  for (const auto& s : field(j, "sets"))
    for (const auto& v : s) all.push_back(static_cast<std::int64_t>(decode_uint(v)));
  return Tuple(std::move(all));
}

RepulsiveSet repulsive_from_json(const json& j) {
  RepulsiveSet z;
  const json* list = &j;
  if (j.is_object()) {
    list = &field(j, "primes");
    if (j.contains("c")) z.witness_constant = j.at("c").get<double>();
  }
  if (!list->is_array()) fail(ErrorKind::argument, "repulsive set must be a JSON list of primes");
  for (const auto& p : *list) z.primes.push_back(decode_uint(p));
  return z;
}

json to_json(const KindReport& r) {
  const auto samples = [](const std::vector<RatioSample>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back({{"at", tower_json(s.at)}, {"ratio", static_cast<double>(s.ratio)}});
    return out;
  };
  const auto param_samples = [](const std::vector<ParamRatioSample>& v, const char* name) {
    json out = json::array();
    for (const auto& s : v)
      out.push_back({{name, static_cast<double>(s.param)}, {"at", tower_json(s.at)}, {"ratio", static_cast<double>(s.ratio)}});
    return out;
  };
  json grid = json::array();
  for (const auto& t : r.grid) grid.push_back(tower_json(t));
  json out{{"normalizer", r.normalizer},
           {"checked_as", std::string(to_string(r.checked_as))},
           {"grid", grid},
           {"monotone", r.monotone}};
  if (r.checked_as == NormalizerKind::first_kind) {
    out["bounded_by_log"] = r.bounded_by_log.value_or(false);
    out["doubling_ratios"] = samples(r.doubling_ratios);
    out["L_eta_estimates"] = param_samples(r.L_eta_estimates, "eta");
    out["doubling_trend"] = r.doubling_trend;
  } else {
    out["lower_sandwich"] = samples(r.lower_sandwich);
    out["upper_sandwich"] = samples(r.upper_sandwich);
    out["scaling_ratios"] = param_samples(r.scaling_ratios, "C");
    out["lower_trend"] = r.lower_trend;
    out["upper_trend"] = r.upper_trend;
    out["scaling_trend"] = r.scaling_trend;
  }
  return out;
}

}  // namespace gapkit::json_io
