// Copyright 2026 The mediahom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <doctest.h>

#include "mediahom/config.hpp"
#include "mediahom/csv.hpp"
#include "mediahom/errors.hpp"
#include "mediahom/scenario.hpp"
#include "oracles.hpp"

using namespace mediahom;
using nlohmann::json;

namespace {

json swap_pair(double p) {
  json j = json::parse(R"({
    "model": "swap", "N": 2, "t": 0.5,
    "couplings": {"chain": 1.0},
    "baths": [{"site": 1, "state": {"diag": 0.5}}]
  })");
  j["baths"][0]["state"]["diag"] = p;
  return j;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

struct ParsedCsv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> comments;
};

ParsedCsv parse_csv(const std::string& text) {
  ParsedCsv out;
  std::stringstream ss(text);
  std::string line;
  bool first = true;
  while (std::getline(ss, line)) {
    if (first) {
      out.header = split(line);
      first = false;
    } else if (!line.empty() && line[0] == '#') {
      out.comments.push_back(line);
    } else {
      std::vector<double> row;
      for (const auto& cell : split(line)) row.push_back(std::strtod(cell.c_str(), nullptr));
      out.rows.push_back(row);
    }
  }
  return out;
}

bool same(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("result table bookkeeping") {
  ResultTable t({"a", "b"});
  t.add_row({1.0, 2.0});
  CHECK_THROWS_AS(t.add_row({1.0}), ArgumentError);
  CHECK(t.at(0, "b") == 2.0);
  CHECK_THROWS_AS(t.column_index("c"), ArgumentError);
  ResultTable u({"a", "b"});
  u.add_row({3.0, 4.0});
  t.append(u);
  CHECK(t.rows().size() == 2);
  CHECK_THROWS_AS(t.append(ResultTable({"x", "y"})), ArgumentError);
}

TEST_CASE("format_real round-trips and spells non-finite values") {
  for (double v : {0.0, 1.0, -2.5, 1e-17, 6.02214076e23, 0.1 + 0.2}) {
    const double back = std::strtod(format_real(v).c_str(), nullptr);
    CHECK(std::abs(back - v) <= 1e-11 * std::max(1.0, std::abs(v)));
  }
  CHECK(format_real(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_real(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("CSV output parses back to the table") {
  ResultTable t({"x", "y", "status"});
  t.add_row({0.125, std::numeric_limits<double>::quiet_NaN(), 0});
  t.add_row({-3.0, 1e-9, 3});
  t.metadata = {{"config_digest", "abc"}};
  t.volatile_metadata = {{"wall_time_s", "0.1"}};
  std::ostringstream plain;
  emit_csv(t, plain);
  const auto parsed = parse_csv(plain.str());
  CHECK(parsed.header == t.columns());
  CHECK(parsed.comments.empty());
  REQUIRE(parsed.rows.size() == 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK(same(parsed.rows[r][c], t.rows()[r][c]));
  CHECK(plain.str().find('\r') == std::string::npos);

  std::ostringstream with_meta;
  emit_csv(t, with_meta, true);
  const auto meta = parse_csv(with_meta.str());
  REQUIRE(meta.comments.size() == 2);
  CHECK(meta.comments[0] == "# config_digest=abc");
  CHECK(meta.comments[1] == "# wall_time_s=0.1");
}

TEST_CASE("empty tables still write a header") {
  std::ostringstream os;
  emit_csv(ResultTable({"a", "b"}), os);
  CHECK(os.str() == "a,b\n");
}

TEST_CASE("CSV file output reports unwritable paths") {
  const auto path = std::filesystem::temp_directory_path() / "mediahom_csv_test.csv";
  ResultTable t({"a"});
  t.add_row({1.0});
  emit_csv(t, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "a\n1\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(emit_csv(t, std::filesystem::path("/nonexistent-dir/x.csv")), IoError);
}

TEST_CASE("swap pair fixed point gives R = N") {
  const double p = 0.8;
  const auto table = run_scenario(parse_config(swap_pair(p)));
  REQUIRE(table.rows().size() == 1);
  const double h = oracle::binary_entropy(p);
  CHECK(table.at(0, "S_A") == doctest::Approx(2.0 * h).epsilon(1e-8));
  CHECK(table.at(0, "S_B") == doctest::Approx(h).epsilon(1e-10));
  CHECK(table.at(0, "R") == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(table.at(0, "C12") <= 1e-6);
  CHECK(table.at(0, "relaxing") == 1.0);
  CHECK(table.at(0, "peripheral") == 1.0);
  CHECK(table.at(0, "status") == status::kOk);
  CHECK(table.metadata.size() == 3);
  CHECK(table.metadata[2].second == "fixed_point");
}

TEST_CASE("both solvers agree and the iterative one reports iterations") {
  auto j = swap_pair(0.7);
  j["solver"] = "both";
  j["initial_state"] = {{"random", 3}};
  const auto table = run_scenario(parse_config(j));
  CHECK(table.at(0, "solver_distance") <= 1e-7);
  CHECK(table.at(0, "iterations") > 0);
  j["solver"] = "iterative";
  j["tolerances"] = {{"max_iter", 3}};
  const auto capped = run_scenario(parse_config(j));
  CHECK(capped.at(0, "status") == status::kNotConverged);
  CHECK(capped.at(0, "iterations") == 3);
}

TEST_CASE("pure bath reports an undefined ratio") {
  auto j = swap_pair(0.5);
  j["baths"][0]["state"] = "zero";
  const auto table = run_scenario(parse_config(j));
  CHECK(table.at(0, "status") == status::kUndefinedRatio);
  CHECK(std::isnan(table.at(0, "R")));
  CHECK(table.at(0, "S_A") <= 1e-8);
}

TEST_CASE("non-relaxing dynamics are flagged, not thrown") {
  auto j = swap_pair(0.5);
  j["t"] = 0.0;
  const auto table = run_scenario(parse_config(j));
  CHECK(table.at(0, "status") == status::kNotRelaxing);
  CHECK(table.at(0, "relaxing") == 0.0);
}

TEST_CASE("trajectory rows start at the initial state") {
  auto j = swap_pair(0.7);
  j["analysis"] = {{"trajectory", 50}};
  const auto table = run_scenario(parse_config(j));
  REQUIRE(table.rows().size() == 51);
  CHECK(table.at(0, "step") == 0.0);
  CHECK(table.at(0, "purity") == doctest::Approx(1.0));
  CHECK(table.at(0, "distance_to_previous") == 0.0);
  const double h = oracle::binary_entropy(0.7);
  CHECK(table.at(50, "S_A") == doctest::Approx(2.0 * h).epsilon(1e-3));
}

TEST_CASE("zero-step trajectory is the initial state alone") {
  auto j = swap_pair(0.7);
  j["analysis"] = {{"trajectory", 0}};
  const auto table = run_scenario(parse_config(j));
  REQUIRE(table.rows().size() == 1);
  CHECK(table.at(0, "step") == 0.0);
  CHECK(table.at(0, "S_A") <= 1e-12);
}

TEST_CASE("spectrum lists every superoperator eigenvalue") {
  auto j = swap_pair(0.7);
  j["analysis"] = "spectrum";
  const auto table = run_scenario(parse_config(j));
  REQUIRE(table.rows().size() == 16);
  CHECK(table.at(0, "modulus") == doctest::Approx(1.0));
  for (std::size_t k = 1; k < 16; ++k) CHECK(table.at(k, "modulus") <= table.at(k - 1, "modulus") + 1e-12);
}

TEST_CASE("profile lists baths around the chain") {
  json j = json::parse(R"({
    "model": "swap", "N": 3, "t": 0.5, "couplings": {"chain": 1.0},
    "baths": [{"site": 2, "state": {"diag": 0.9}}, {"site": 0, "state": {"diag": 0.9}}],
    "analysis": "profile"
  })");
  const auto table = run_scenario(parse_config(j));
  REQUIRE(table.rows().size() == 5);
  CHECK(table.at(0, "is_bath") == 1.0);
  CHECK(table.at(0, "site") == 0.0);
  CHECK(table.at(4, "is_bath") == 1.0);
  CHECK(table.at(4, "site") == 2.0);
  // Equal baths homogenize every site to the same state.
  for (std::size_t r = 0; r < 5; ++r) CHECK(table.at(r, "p0") == doctest::Approx(0.9).epsilon(1e-8));
}

TEST_CASE("alternating and simultaneous two-bath modes agree on equal baths") {
  json j = json::parse(R"({
    "model": "xxz", "delta": 1.0, "N": 2, "t": 0.5, "couplings": {"chain": 1.0},
    "baths": [{"site": 1, "state": {"diag": 0.8}}, {"site": 0, "state": {"diag": 0.8}}],
    "analysis": "profile"
  })");
  const auto sim = run_scenario(parse_config(j));
  j["two_bath_mode"] = "alternating";
  const auto alt = run_scenario(parse_config(j));
  for (std::size_t r = 0; r < 4; ++r) {
    CHECK(sim.at(r, "p0") == doctest::Approx(0.8).epsilon(1e-8));
    CHECK(alt.at(r, "p0") == doctest::Approx(0.8).epsilon(1e-8));
  }
}

TEST_CASE("post-collision bath populations balance in the steady state") {
  // Collisions conserve excitations, so over one steady-state cycle what one
  // bath gains the other loses.
  json j = json::parse(R"({
    "model": "xxz", "delta": 1.0, "N": 3, "t": 0.5, "couplings": {"chain": 1.0},
    "baths": [{"site": 2, "state": {"diag": 0.9}}, {"site": 0, "state": {"diag": 0.4}}],
    "analysis": "profile"
  })");
  for (const char* mode : {"simultaneous", "alternating"}) {
    CAPTURE(mode);
    j["two_bath_mode"] = mode;
    j["bath_columns"] = "input";
    const auto in = run_scenario(parse_config(j));
    j["bath_columns"] = "post_collision";
    const auto post = run_scenario(parse_config(j));
    REQUIRE(post.rows().size() == 5);
    const double flux_c = post.at(0, "p0") - in.at(0, "p0");
    const double flux_b = post.at(4, "p0") - in.at(4, "p0");
    CHECK(std::abs(flux_b) > 1e-3);
    CHECK(std::abs(flux_b + flux_c) <= 1e-9);
    for (std::size_t r = 1; r < 4; ++r) CHECK(post.at(r, "p0") == in.at(r, "p0"));
  }
}

TEST_CASE("sweep keeps input order across worker threads") {
  const auto cfg = parse_config(swap_pair(0.5));
  std::vector<json> values;
  for (double p : {0.9, 0.6, 0.75, 0.55, 0.8}) values.push_back(p);
  const auto serial = sweep(cfg, "/baths/0/state/diag", values, "p", 1);
  const auto threaded = sweep(cfg, "/baths/0/state/diag", values, "p", 3);
  REQUIRE(serial.rows().size() == 5);
  CHECK(serial.columns().front() == "p");
  for (std::size_t r = 0; r < 5; ++r) {
    CHECK(serial.at(r, "p") == values[r].get<double>());
    for (std::size_t c = 0; c < serial.columns().size(); ++c) {
      CHECK(same(serial.rows()[r][c], threaded.rows()[r][c]));
    }
    CHECK(serial.at(r, "S_B") ==
          doctest::Approx(oracle::binary_entropy(values[r].get<double>())).epsilon(1e-10));
  }
  const auto default_label = sweep(cfg, "/t", {json(0.4)}, "", 1);
  CHECK(default_label.columns().front() == "t");
}

TEST_CASE("sweep rejects bad parameters") {
  const auto cfg = parse_config(swap_pair(0.5));
  CHECK_THROWS_AS(sweep(cfg, "/nope", {json(1.0)}, "", 1), ConfigError);
  CHECK_THROWS_AS(sweep(cfg, "t", {json(1.0)}, "", 1), ConfigError);
  CHECK_THROWS_AS(sweep(cfg, "/t", {json("fast")}, "", 1), ConfigError);
  CHECK_THROWS_AS(sweep(cfg, "/t", {json(-1.0)}, "", 1), ConfigError);
  CHECK_THROWS_AS(sweep(cfg, 1), ConfigError);  // no sweep section
}

TEST_CASE("sweep of the shipped fig4 config runs its grid") {
  auto cfg = load_config(std::string(MEDIAHOM_CONFIG_DIR) + "/fig4.json");
  REQUIRE(cfg.sweep.has_value());
  cfg.sweep->values = {json(1.0)};
  const auto table = sweep(cfg, 1);
  CHECK(table.at(0, "S_A") <= 1e-6);
  CHECK(table.at(0, "C12") <= 1e-6);
}

}  // TEST_SUITE
