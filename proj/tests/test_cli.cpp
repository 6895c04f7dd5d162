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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gapkit/covering.hpp"
#include "gapkit/json_io.hpp"
#include "oracles.hpp"

using namespace gapkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run gapkit_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in, name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gapkit_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("usage errors") {
  CHECK(gapkit_cli({}).code == 1);
  CHECK(gapkit_cli({"frobnicate"}).code == 1);
  CHECK(gapkit_cli({"gaps", "--limit", "100", "--bogus"}).code == 1);
  CHECK(gapkit_cli({"gaps"}).code == 1);
  CHECK(gapkit_cli({"--help"}).code == 0);
  const auto bad = gapkit_cli({"gaps", "--limit", "100", "--normalizer", "nope"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("catalog error") != std::string::npos);
}

TEST_CASE("sieve and gap streams") {
  const auto s = gapkit_cli({"sieve", "--limit", "1000000"});
  CHECK(s.code == 0);
  CHECK(s.out == "pi(1000000) = 78498\n");

  const auto path = temp_path("gaps.csv");
  const auto g = gapkit_cli({"gaps", "--limit", "1000000", "--normalizer", "R1", "--csv", path});
  CHECK(g.code == 0);
  const auto csv = slurp(path);
  CHECK(lines(csv) == 78497 + 1);
  CHECK(csv.rfind("p,d,normalized\n", 0) == 0);
  std::filesystem::remove(path);

  CHECK(gapkit_cli({"gaps", "--limit", "100", "--normalizer", "log"}).out == golden("gaps_100.csv"));
  CHECK(gapkit_cli({"hist", "--limit", "100000", "--normalizer", "log", "--bins", "8", "--x-max", "4"}).out ==
        golden("hist_1e5.csv"));

  const auto one = gapkit_cli({"gaps", "--limit", "3000000", "--normalizer", "sqrt_log", "--threads", "1"});
  const auto many = gapkit_cli({"gaps", "--limit", "3000000", "--normalizer", "sqrt_log", "--threads", "3"});
  CHECK(one.out == many.out);

  const auto ch = gapkit_cli({"chains", "--limit", "100", "--a", "3"});
  CHECK(ch.code == 0);
  CHECK(lines(ch.out) == 1 + 24 - 3 + 1);
  const auto dh = gapkit_cli({"diff-hits", "--limit", "100000", "--alphas", "0,1", "--tol", "0.05"});
  CHECK(dh.code == 0);
  CHECK(lines(dh.out) == 2);
}

TEST_CASE("constants") {
  CHECK(gapkit_cli({"constants", "--theta", "1/2"}).out == golden("constants_half.json"));
  CHECK(gapkit_cli({"constants", "--theta", "0.5"}).out == golden("constants_half.json"));
  const auto j = nlohmann::json::parse(gapkit_cli({"constants", "--theta", "2/3"}).out);
  CHECK(j["bucket_size"] == 4);
  CHECK(j["c1"] == "2/11");
  CHECK(gapkit_cli({"constants", "--theta", "0"}).code == 1);
}

TEST_CASE("cover and corridor") {
  const auto c = gapkit_cli({"cover", "--x", "10", "--y", "30", "--h", "17,23", "--profile", "toy", "--strategy",
                             "greedy", "--seed", "0"});
  REQUIRE(c.code == 0);
  CHECK(c.out == golden("cover_x10.json"));
  const auto cert = json_io::certificate_from_json(nlohmann::json::parse(c.out));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> classes;
  for (const auto& rc : cert.classes) classes.emplace_back(rc.p, rc.c);
  CHECK(oracle::sifted(10, 30, classes) == std::vector<std::uint64_t>{17, 23});

  const auto cert_path = temp_path("cert.json");
  std::ofstream(cert_path) << c.out;
  const auto w = gapkit_cli({"corridor", "--cert", cert_path, "--seed", "0", "--mr-rounds", "40"});
  REQUIRE(w.code == 0);
  CHECK(w.out == golden("witness_x10.json"));
  const auto witness = json_io::witness_from_json(nlohmann::json::parse(w.out));
  CHECK(verify_corridor(witness, cert).ok);
  CHECK(json_io::to_json(witness) == nlohmann::json::parse(w.out));

  const auto none = gapkit_cli({"corridor", "--cert", cert_path, "--k-max", "0", "--k-min", "1", "--seed", "0"});
  CHECK(none.code == 3);
  std::filesystem::remove(cert_path);

  const auto cramped = gapkit_cli({"cover", "--x", "50", "--y", "200", "--h", "101", "--c-cap", "2", "--seed", "0"});
  CHECK(cramped.code == 2);
  CHECK(cramped.err.find("capacity error") != std::string::npos);

  const auto seeded = gapkit_cli({"cover", "--x", "10", "--y", "30", "--h", "17,23", "--strategy", "random"});
  CHECK(seeded.code == 0);
  CHECK(seeded.err.find("seed: ") != std::string::npos);

  const auto z_path = temp_path("z.json");
  std::ofstream(z_path) << "[13]";
  const auto ex = gapkit_cli({"cover", "--x", "10", "--y", "30", "--h", "17,23", "--seed", "1", "--z-file", z_path});
  CHECK(ex.code == 0);
  CHECK(json_io::certificate_from_json(nlohmann::json::parse(ex.out)).excluded.primes == std::vector<std::uint64_t>{13});
  std::filesystem::remove(z_path);

  CHECK(gapkit_cli({"cover", "--x", "10", "--y", "30", "--h", "11,12", "--seed", "1"}).code == 1);
  CHECK(gapkit_cli({"cover", "--x", "10", "--profile", "paper", "--h", "17", "--seed", "1"}).code == 1);
}

TEST_CASE("tuple plans feed the cover") {
  const auto t = gapkit_cli({"tuple", "--x", "100", "--y", "200", "--offsets", "0", "--sizes", "4"});
  REQUIRE(t.code == 0);
  CHECK(t.out == golden("tuple_x100.json"));
  const auto plan_path = temp_path("plan.json");
  std::ofstream(plan_path) << t.out;
  const auto c = gapkit_cli({"cover", "--x", "100", "--y", "200", "--h-from-plan", plan_path, "--seed", "0"});
  std::filesystem::remove(plan_path);
  REQUIRE(c.code == 0);
  const auto cert = json_io::certificate_from_json(nlohmann::json::parse(c.out));
  CHECK(cert.h == Tuple{101, 103, 107, 109});
  CHECK(survivors(cert) == std::vector<std::uint64_t>{101, 103, 107, 109});

  const auto placed = gapkit_cli({"tuple", "--x", "1000000", "--y", "6000000", "--alphas", "0,1", "--sizes", "1"});
  CHECK(placed.code == 1);
  CHECK(placed.err.find("placement error") != std::string::npos);
}

TEST_CASE("normalizer checks") {
  const auto r = gapkit_cli({"check-normalizer", "--normalizer", "log"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["monotone"] == true);
  CHECK(j["bounded_by_log"] == true);
  CHECK(gapkit_cli({"check-normalizer", "--normalizer", "R1"}).code == 1);
  CHECK(gapkit_cli({"check-normalizer", "--normalizer", "R1", "--kind", "first"}).code == 0);
  const auto s = nlohmann::json::parse(gapkit_cli({"check-normalizer", "--normalizer", "x_log_over_log2"}).out);
  CHECK(s["checked_as"] == "second-kind");
  CHECK(s["lower_trend"] == true);
  CHECK(s["grid"].back().is_string());
}

TEST_CASE("json integers") {
  CHECK(json_io::encode_uint(5) == 5);
  CHECK(json_io::encode_uint((std::uint64_t{1} << 53) + 1) == "9007199254740993");
  CHECK(json_io::decode_uint(nlohmann::json("9007199254740993")) == (std::uint64_t{1} << 53) + 1);
  CHECK(json_io::decode_uint(nlohmann::json(7)) == 7);
  CHECK_THROWS(json_io::decode_uint(nlohmann::json("-3")));
  CHECK_THROWS(json_io::decode_uint(nlohmann::json("12x")));
  CoverCertificate big;
  big.x = std::uint64_t{1} << 60;
  big.y = big.x + 5;
  big.c_upper = big.x * 2;
  big.seed = ~std::uint64_t{0};
  big.classes = {{(std::uint64_t{1} << 61) - 1, 12345}};
  CHECK(json_io::certificate_from_json(json_io::to_json(big)) == big);
}
