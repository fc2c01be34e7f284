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

#include "mediahom/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "mediahom/errors.hpp"

namespace mediahom {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxJointDim = 1024;

[[noreturn]] void reject(const std::string& field, const std::string& what) {
  throw ConfigError("config." + field + ": " + what);
}

double get_real(const json& j, const std::string& field) {
  if (!j.is_number()) reject(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) reject(field, "expected a finite number");
  return v;
}

double get_probability(const json& j, const std::string& field) {
  const double p = get_real(j, field);
  if (p < 0.0 || p > 1.0) reject(field, "expected a probability in [0, 1]");
  return p;
}

std::size_t get_count(const json& j, const std::string& field) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) reject(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v < 0) reject(field, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

cplx get_complex(const json& j, const std::string& field) {
  if (j.is_number()) return {get_real(j, field), 0.0};
  if (j.is_array() && j.size() == 2) {
    return {get_real(j[0], field + "[0]"), get_real(j[1], field + "[1]")};
  }
  reject(field, "expected a number or a [re, im] pair");
}

void require_object_keys(const json& j, const std::string& field,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) {
      reject(field.empty() ? key : field + "." + key, "unknown field");
    }
  }
}

DensityMatrix make_state(ComplexMatrix m, const std::string& field) {
  try {
    return DensityMatrix(std::move(m));
  } catch (const Error& e) {
    reject(field, e.what());
  }
}

ComplexMatrix parse_matrix(const json& j, std::size_t dim, const std::string& field) {
  if (!j.is_array() || j.size() != dim) {
    reject(field, "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  }
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < dim; ++r) {
    const auto row_field = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != dim) {
      reject(row_field, "expected a row of " + std::to_string(dim) + " entries");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          get_complex(j[r][c], row_field + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

}  // namespace

DensityMatrix parse_state(const json& j, std::size_t dim, const std::string& field) {
  const auto n = static_cast<Eigen::Index>(dim);
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "zero") return DensityMatrix::pure(basis_vector(dim, 0));
    if (name == "mixed") return DensityMatrix::maximally_mixed(dim);
    if (name == "one" || name == "plus" || name == "minus") {
      if (dim != 2) reject(field, "state '" + name + "' is defined for qubits only");
      if (name == "one") return DensityMatrix::pure(basis_vector(2, 1));
      const double s = name == "plus" ? 1.0 : -1.0;
      ComplexVector v(2);
      v << 1.0 / std::sqrt(2.0), s / std::sqrt(2.0);
      return DensityMatrix::pure(v);
    }
    reject(field, "unknown named state '" + name + "' (zero, one, plus, minus, mixed)");
  }
  if (!j.is_object() || j.size() != 1) {
    reject(field, "expected a state name or an object with one of diag, pure, matrix, mix");
  }
  const auto entry = j.begin();
  const std::string key = entry.key();
  const json& val = entry.value();
  const auto sub = field + "." + key;
  if (key == "diag") {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    if (val.is_number()) {
      if (dim != 2) reject(sub, "scalar diag(p) is defined for qubits only");
      const double p = get_probability(val, sub);
      m(0, 0) = p;
      m(1, 1) = 1.0 - p;
    } else if (val.is_array() && val.size() == dim) {
      for (std::size_t k = 0; k < dim; ++k) {
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) =
            get_probability(val[k], sub + "[" + std::to_string(k) + "]");
      }
    } else {
      reject(sub, "expected p or a list of " + std::to_string(dim) + " probabilities");
    }
    return make_state(std::move(m), sub);
  }
  if (key == "pure") {
    if (!val.is_array() || val.size() != dim) {
      reject(sub, "expected " + std::to_string(dim) + " amplitudes");
    }
    ComplexVector v(n);
    for (std::size_t k = 0; k < dim; ++k) {
      v(static_cast<Eigen::Index>(k)) = get_complex(val[k], sub + "[" + std::to_string(k) + "]");
    }
    if (std::abs(v.norm() - 1.0) > tol::kStructural) reject(sub, "amplitudes are not normalized");
    return DensityMatrix::pure(v);
  }
  if (key == "matrix") return make_state(parse_matrix(val, dim, sub), sub);
  if (key == "mix") {
    if (!val.is_object()) reject(sub, "expected {\"p\": ..., \"a\": state, \"b\": state}");
    require_object_keys(val, sub, {"p", "a", "b"});
    if (!val.contains("p") || !val.contains("a") || !val.contains("b")) {
      reject(sub, "requires p, a and b");
    }
    const double p = get_probability(val["p"], sub + ".p");
    const auto a = parse_state(val["a"], dim, sub + ".a");
    const auto b = parse_state(val["b"], dim, sub + ".b");
    return make_state(hermitian_part(p * a.matrix() + (1.0 - p) * b.matrix()), sub);
  }
  reject(sub, "unknown state form (diag, pure, matrix, mix)");
}

NetworkSpec ScenarioConfig::network() const {
  NetworkSpec spec;
  spec.graph = CouplingGraph(n_sites, edges);
  spec.local_dim = local_dim;
  if (model == ModelKind::kXxz) {
    spec.model = XxzModel{delta};
  } else {
    spec.model = SwapModel{};
  }
  for (const auto& b : baths) spec.baths.push_back({b.label, b.site});
  return spec;
}

ScenarioConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
  require_object_keys(j, "",
                      {"name", "description", "model", "N", "d", "delta", "couplings", "t",
                       "baths", "initial_state", "analysis", "tolerances", "two_bath_mode",
                       "bath_columns", "solver", "sweep"});
  ScenarioConfig cfg;
  cfg.source = j;

  if (!j.contains("model") || !j["model"].is_string()) reject("model", "expected \"swap\" or \"xxz\"");
  const auto model = j["model"].get<std::string>();
  if (model == "swap") {
    cfg.model = ModelKind::kSwap;
  } else if (model == "xxz") {
    cfg.model = ModelKind::kXxz;
  } else {
    reject("model", "expected \"swap\" or \"xxz\", got \"" + model + "\"");
  }

  if (!j.contains("N")) reject("N", "missing");
  cfg.n_sites = get_count(j["N"], "N");
  if (cfg.n_sites < 1) reject("N", "must be at least 1");
  cfg.local_dim = j.contains("d") ? get_count(j["d"], "d") : 2;
  if (cfg.local_dim < 2) reject("d", "local dimension must be at least 2");
  if (cfg.model == ModelKind::kXxz && cfg.local_dim != 2) reject("d", "the xxz model requires d = 2");
  if (j.contains("delta")) {
    if (cfg.model != ModelKind::kXxz) reject("delta", "only meaningful for the xxz model");
    cfg.delta = get_real(j["delta"], "delta");
  } else if (cfg.model == ModelKind::kXxz) {
    reject("delta", "missing (required by the xxz model)");
  }

  if (!j.contains("couplings") || !j["couplings"].is_object() || j["couplings"].size() != 1) {
    reject("couplings", "expected {\"chain\": J} or {\"edges\": [[a, b, J], ...]}");
  }
  const auto& cp = j["couplings"];
  if (cp.contains("chain")) {
    const double coupling = get_real(cp["chain"], "couplings.chain");
    const auto chain = chain_graph(cfg.n_sites, coupling);
    cfg.edges = chain.edges();
  } else if (cp.contains("edges")) {
    if (!cp["edges"].is_array()) reject("couplings.edges", "expected a list of [a, b, J]");
    for (std::size_t k = 0; k < cp["edges"].size(); ++k) {
      const auto f = "couplings.edges[" + std::to_string(k) + "]";
      const auto& e = cp["edges"][k];
      if (!e.is_array() || e.size() != 3) reject(f, "expected [a, b, J]");
      cfg.edges.push_back({get_count(e[0], f + "[0]"), get_count(e[1], f + "[1]"),
                           get_real(e[2], f + "[2]")});
    }
    try {
      CouplingGraph(cfg.n_sites, cfg.edges);
    } catch (const Error& e) {
      reject("couplings.edges", e.what());
    }
  } else {
    reject("couplings", "expected a chain or edges entry");
  }

  if (!j.contains("t")) reject("t", "missing");
  cfg.t = get_real(j["t"], "t");
  if (cfg.t < 0.0) reject("t", "interaction time must be non-negative");

  if (!j.contains("baths") || !j["baths"].is_array() || j["baths"].empty()) {
    reject("baths", "expected a non-empty list of {\"site\": k, \"state\": ...}");
  }
  std::set<std::size_t> used;
  for (std::size_t k = 0; k < j["baths"].size(); ++k) {
    const auto f = "baths[" + std::to_string(k) + "]";
    const auto& b = j["baths"][k];
    if (!b.is_object()) reject(f, "expected an object");
    require_object_keys(b, f, {"site", "state", "label"});
    if (!b.contains("site")) reject(f + ".site", "missing");
    if (!b.contains("state")) reject(f + ".state", "missing");
    const auto site = get_count(b["site"], f + ".site");
    if (site >= cfg.n_sites) reject(f + ".site", "site index outside the network");
    if (!used.insert(site).second) reject(f + ".site", "another bath is attached to this site");
    std::string label = "bath" + std::to_string(k);
    if (b.contains("label")) {
      if (!b["label"].is_string()) reject(f + ".label", "expected a string");
      label = b["label"].get<std::string>();
    }
    cfg.baths.push_back({site, parse_state(b["state"], cfg.local_dim, f + ".state"), label});
  }

  std::size_t joint = 1;
  for (std::size_t k = 0; k < cfg.n_sites + cfg.baths.size(); ++k) {
    joint *= cfg.local_dim;
    if (joint > kMaxJointDim) {
      reject("N", "joint system+bath dimension exceeds " + std::to_string(kMaxJointDim));
    }
  }
  std::size_t system_dim = 1;
  for (std::size_t k = 0; k < cfg.n_sites; ++k) system_dim *= cfg.local_dim;

  if (j.contains("initial_state")) {
    const auto& is = j["initial_state"];
    if (is.is_string() && is.get<std::string>() == "ground") {
      cfg.initial = GroundInitial{};
    } else if (is.is_object() && is.size() == 1 && is.contains("random")) {
      cfg.initial = RandomInitial{get_count(is["random"], "initial_state.random")};
    } else if (is.is_object() && is.size() == 1 && is.contains("explicit")) {
      cfg.initial = ExplicitInitial{
          parse_state(is["explicit"], system_dim, "initial_state.explicit")};
    } else {
      reject("initial_state", "expected \"ground\", {\"random\": seed} or {\"explicit\": state}");
    }
  }

  if (j.contains("analysis")) {
    const auto& a = j["analysis"];
    if (a.is_string()) {
      const auto name = a.get<std::string>();
      if (name == "fixed_point") {
        cfg.analysis = FixedPointAnalysis{};
      } else if (name == "spectrum") {
        cfg.analysis = SpectrumAnalysis{};
      } else if (name == "profile") {
        cfg.analysis = ProfileAnalysis{};
      } else {
        reject("analysis", "unknown analysis '" + name + "'");
      }
    } else if (a.is_object() && a.size() == 1 && a.contains("trajectory")) {
      cfg.analysis = TrajectoryAnalysis{get_count(a["trajectory"], "analysis.trajectory")};
    } else {
      reject("analysis", "expected fixed_point, spectrum, profile or {\"trajectory\": n}");
    }
  }

  if (j.contains("tolerances")) {
    const auto& tj = j["tolerances"];
    if (!tj.is_object()) reject("tolerances", "expected an object");
    require_object_keys(tj, "tolerances", {"iteration", "max_iter", "peripheral"});
    if (tj.contains("iteration")) {
      cfg.tolerances.iteration = get_real(tj["iteration"], "tolerances.iteration");
      if (cfg.tolerances.iteration <= 0.0) reject("tolerances.iteration", "must be positive");
    }
    if (tj.contains("max_iter")) cfg.tolerances.max_iter = get_count(tj["max_iter"], "tolerances.max_iter");
    if (tj.contains("peripheral")) {
      cfg.tolerances.peripheral = get_real(tj["peripheral"], "tolerances.peripheral");
      if (cfg.tolerances.peripheral <= 0.0) reject("tolerances.peripheral", "must be positive");
    }
  }

  auto enum_field = [&](const char* name, std::initializer_list<const char*> options) -> int {
    if (!j.contains(name)) return 0;
    if (!j[name].is_string()) reject(name, "expected a string");
    const auto v = j[name].get<std::string>();
    int idx = 0;
    std::string listed;
    for (const char* o : options) {
      if (v == o) return idx;
      listed += (idx ? ", " : "") + std::string(o);
      ++idx;
    }
    reject(name, "expected one of " + listed);
  };
  cfg.two_bath_mode =
      static_cast<TwoBathMode>(enum_field("two_bath_mode", {"simultaneous", "alternating"}));
  cfg.bath_columns = static_cast<BathColumns>(enum_field("bath_columns", {"input", "post_collision"}));
  cfg.solver = static_cast<Solver>(enum_field("solver", {"auto", "spectral", "iterative", "both"}));
  if ((cfg.solver == Solver::kSpectral || cfg.solver == Solver::kBoth) &&
      system_dim > tol::kMaxSuperoperatorDim) {
    reject("solver", "spectral analysis needs system dimension <= " +
                         std::to_string(tol::kMaxSuperoperatorDim));
  }
  if (std::holds_alternative<SpectrumAnalysis>(cfg.analysis) &&
      system_dim > tol::kMaxSuperoperatorDim) {
    reject("analysis", "spectrum needs system dimension <= " +
                           std::to_string(tol::kMaxSuperoperatorDim));
  }

  if (j.contains("sweep")) {
    const auto& s = j["sweep"];
    if (!s.is_object()) reject("sweep", "expected an object");
    require_object_keys(s, "sweep", {"param", "label", "values", "grid"});
    if (!s.contains("param") || !s["param"].is_string()) reject("sweep.param", "expected a JSON pointer string");
    SweepConfig sw;
    sw.param = s["param"].get<std::string>();
    if (s.contains("label")) {
      if (!s["label"].is_string()) reject("sweep.label", "expected a string");
      sw.label = s["label"].get<std::string>();
    }
    if (s.contains("values") == s.contains("grid")) {
      reject("sweep", "give exactly one of values or grid");
    }
    if (s.contains("values")) {
      if (!s["values"].is_array() || s["values"].empty()) reject("sweep.values", "expected a non-empty list");
      for (const auto& v : s["values"]) sw.values.push_back(v);
    } else {
      const auto& g = s["grid"];
      if (!g.is_object() || !g.contains("start") || !g.contains("stop") || !g.contains("count")) {
        reject("sweep.grid", "expected {\"start\": a, \"stop\": b, \"count\": n}");
      }
      const double a = get_real(g["start"], "sweep.grid.start");
      const double b = get_real(g["stop"], "sweep.grid.stop");
      const auto n = get_count(g["count"], "sweep.grid.count");
      if (n < 1) reject("sweep.grid.count", "must be at least 1");
      for (std::size_t k = 0; k < n; ++k) {
        sw.values.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(k) /
                                                  static_cast<double>(n - 1));
      }
    }
    cfg.sweep = std::move(sw);
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

std::string config_digest(const json& j) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace mediahom
