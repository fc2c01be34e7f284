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

// mediahom: run collision-model scenarios from JSON configs and write CSV.
//
//   mediahom run      --config cfg.json [--out results.csv]
//   mediahom sweep    --config cfg.json [--param /t --values 0.5,1.0] [--jobs 4]
//   mediahom spectrum --config cfg.json
//   mediahom check    --config cfg.json

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "mediahom/config.hpp"
#include "mediahom/errors.hpp"
#include "mediahom/scenario.hpp"

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_iter;
  std::optional<double> tol;
  std::optional<std::size_t> jobs;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_out) {
  cmd->add_option("--config", o.config, "Scenario config (JSON)")->required();
  if (with_out) cmd->add_option("--out", o.out, "Output CSV path (default: stdout)");
  cmd->add_option("--seed", o.seed, "Seed for a random initial state");
  cmd->add_option("--max-iter", o.max_iter, "Iteration cap of the iterative solver");
  cmd->add_option("--tol", o.tol, "Convergence tolerance of the iterative solver");
  cmd->add_option("--jobs", o.jobs, "Parallel sweep points (fallback: MEDIAHOM_JOBS)");
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mediahom::IoError("cannot open config file '" + path + "'");
  try {
    return json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw mediahom::ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

// Command-line overrides are written into the document so they are part of
// the config digest.
mediahom::ScenarioConfig load(const CommonOptions& o) {
  json j = load_json(o.config);
  if (o.seed) j["initial_state"] = {{"random", *o.seed}};
  if (o.max_iter) j["tolerances"]["max_iter"] = *o.max_iter;
  if (o.tol) j["tolerances"]["iteration"] = *o.tol;
  return mediahom::parse_config(j);
}

std::size_t resolve_jobs(const CommonOptions& o) {
  if (o.jobs) return std::max<std::size_t>(1, *o.jobs);
  if (const char* env = std::getenv("MEDIAHOM_JOBS")) {
    try {
      const auto v = std::stoul(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "mediahom: ignoring invalid MEDIAHOM_JOBS='" << env << "'\n";
  }
  return 1;
}

void write(const mediahom::ResultTable& t, const std::string& out) {
  if (out.empty()) {
    mediahom::emit_csv(t, std::cout, true);
  } else {
    mediahom::emit_csv(t, std::filesystem::path(out), true);
  }
}

std::vector<json> parse_values(const std::string& text) {
  std::vector<json> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(json::parse(item));
    } catch (const json::parse_error&) {
      throw mediahom::ConfigError("--values: cannot parse '" + item + "'");
    }
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collision-model simulations of spin networks coupled to ancilla baths"};
  app.require_subcommand(1);

  CommonOptions run_o, sweep_o, spec_o, check_o;
  auto* run = app.add_subcommand("run", "Run a single scenario");
  add_common(run, run_o, true);

  auto* sw = app.add_subcommand("sweep", "Sweep one config parameter");
  add_common(sw, sweep_o, true);
  std::string param, values_text, label;
  sw->add_option("--param", param, "JSON pointer of the swept value, e.g. /delta");
  sw->add_option("--values", values_text, "Comma-separated values");
  sw->add_option("--label", label, "Name of the swept column");

  auto* spec = app.add_subcommand("spectrum", "Dump superoperator eigenvalues");
  add_common(spec, spec_o, true);

  auto* check = app.add_subcommand("check", "Validate a config without running it");
  add_common(check, check_o, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      write(mediahom::run_scenario(load(run_o)), run_o.out);
    } else if (sw->parsed()) {
      const auto cfg = load(sweep_o);
      const auto jobs = resolve_jobs(sweep_o);
      if (!param.empty() || !values_text.empty()) {
        if (param.empty() || values_text.empty()) {
          throw mediahom::ConfigError("sweep: --param and --values must be given together");
        }
        write(mediahom::sweep(cfg, param, parse_values(values_text), label, jobs), sweep_o.out);
      } else {
        write(mediahom::sweep(cfg, jobs), sweep_o.out);
      }
    } else if (spec->parsed()) {
      json j = load_json(spec_o.config);
      j["analysis"] = "spectrum";
      j.erase("sweep");
      write(mediahom::run_scenario(mediahom::parse_config(j)), spec_o.out);
    } else if (check->parsed()) {
      const auto cfg = load(check_o);
      std::cout << "ok " << mediahom::config_digest(cfg.source) << "\n";
    }
  } catch (const mediahom::ConfigError& e) {
    std::cerr << "mediahom: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "mediahom: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
