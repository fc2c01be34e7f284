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

#include "mediahom/scenario.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <thread>

#include "mediahom/collision.hpp"
#include "mediahom/convergence.hpp"
#include "mediahom/errors.hpp"
#include "mediahom/random.hpp"

namespace mediahom {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// One period of the dynamics: a single simultaneous collision, or one
// collision per bath in configuration order.
struct Dynamics {
  std::vector<CollisionChannel> cycle;

  DensityMatrix step(const DensityMatrix& rho) const {
    DensityMatrix out = rho;
    for (const auto& ch : cycle) out = ch.apply(out);
    return out;
  }

  Superoperator superoperator() const {
    Superoperator s = superoperator_matrix(cycle.front());
    for (std::size_t k = 1; k < cycle.size(); ++k) {
      s = compose(superoperator_matrix(cycle[k]), s);
    }
    return s;
  }
};

Dynamics build_dynamics(const ScenarioConfig& cfg, const NetworkSpec& spec) {
  const ComplexMatrix h_a = system_hamiltonian(spec);
  Dynamics dyn;
  const auto& baths = cfg.baths;
  if (cfg.two_bath_mode == TwoBathMode::kAlternating && baths.size() > 1) {
    for (std::size_t b = 0; b < baths.size(); ++b) {
      NetworkSpec single = spec;
      single.baths = {spec.baths[b]};
      dyn.cycle.push_back(build_channel(h_a, bath_interaction(single, 0), baths[b].state, cfg.t));
    }
    return dyn;
  }
  if (baths.size() == 1) {
    dyn.cycle.push_back(build_channel(h_a, bath_interaction(spec, 0), baths[0].state, cfg.t));
  } else if (baths.size() == 2) {
    dyn.cycle.push_back(build_two_bath_channel(h_a, bath_interaction(spec, 0),
                                               bath_interaction(spec, 1), baths[0].state,
                                               baths[1].state, cfg.t));
  } else {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<ComplexMatrix> states;
    for (std::size_t b = 0; b < baths.size(); ++b) {
      pairs.emplace_back(cfg.n_sites + b, baths[b].site);
      states.push_back(baths[b].state.matrix());
    }
    dyn.cycle.push_back(build_channel(
        h_a, interaction_hamiltonian(spec.joint_shape(), pairs),
        SubsystemShape(std::vector<std::size_t>(baths.size(), cfg.local_dim)),
        DensityMatrix(tensor(states)), cfg.t));
  }
  return dyn;
}

DensityMatrix initial_state(const ScenarioConfig& cfg, std::size_t dim) {
  if (std::holds_alternative<RandomInitial>(cfg.initial)) {
    random::Rng rng(std::get<RandomInitial>(cfg.initial).seed);
    return random::mixed_state(dim, rng);
  }
  if (const auto* e = std::get_if<ExplicitInitial>(&cfg.initial)) return e->state;
  return DensityMatrix::pure(basis_vector(dim, 0));
}

struct SteadyState {
  std::optional<DensityMatrix> rho;
  double status = status::kOk;
  double gap = kNaN;
  double relaxing = kNaN;
  double peripheral = kNaN;
  double residual = kNaN;
  double iterations = 0;
  double solver_distance = kNaN;
};

SteadyState solve_steady_state(const ScenarioConfig& cfg, const Dynamics& dyn,
                               std::size_t dim) {
  SteadyState out;
  Solver solver = cfg.solver;
  if (solver == Solver::kAuto) {
    solver = dim <= tol::kMaxSuperoperatorDim ? Solver::kSpectral : Solver::kIterative;
  }
  try {
    if (solver == Solver::kSpectral || solver == Solver::kBoth) {
      const auto report = is_relaxing(dyn.superoperator(), cfg.tolerances.peripheral);
      out.gap = report.spectral_gap;
      out.relaxing = report.is_relaxing ? 1.0 : 0.0;
      out.peripheral = static_cast<double>(report.peripheral_count);
      if (!report.is_relaxing) {
        out.status = status::kNotRelaxing;
        return out;
      }
      out.rho = report.fixed_point;
      out.residual = report.residual;
    }
    if (solver == Solver::kIterative || solver == Solver::kBoth) {
      const DensityMatrix rho0 = initial_state(cfg, dim);
      std::optional<IterativeFixedPoint> it;
      if (dyn.cycle.size() == 1) {
        it = iterative_fixed_point(dyn.cycle.front(), rho0, cfg.tolerances.iteration,
                                   cfg.tolerances.max_iter);
      } else {
        DensityMatrix cur = rho0;
        double res = std::numeric_limits<double>::infinity();
        std::size_t n = 0;
        while (n < cfg.tolerances.max_iter && res > cfg.tolerances.iteration) {
          DensityMatrix next = dyn.step(cur);
          res = trace_distance(next, cur);
          cur = std::move(next);
          ++n;
        }
        it = IterativeFixedPoint{cur, n, res, res <= cfg.tolerances.iteration};
      }
      out.iterations = static_cast<double>(it->iterations);
      if (!it->converged) {
        out.status = status::kNotConverged;
        out.residual = it->residual;
        return out;
      }
      if (out.rho) {
        out.solver_distance = trace_distance(*out.rho, it->state);
      } else {
        out.rho = it->state;
        out.residual = it->residual;
      }
    }
  } catch (const Error&) {
    out.rho.reset();
    out.status = status::kNumerical;
  }
  return out;
}

double pair_concurrence(const ScenarioConfig& cfg, const NetworkSpec& spec,
                        const DensityMatrix& rho) {
  if (cfg.local_dim != 2 || cfg.n_sites < 2) return kNaN;
  const ComplexMatrix r12 = partial_trace(rho.matrix(), spec.system_shape(), {0, 1});
  return concurrence(DensityMatrix(hermitian_part(r12), tol::kOutput));
}

ResultTable fixed_point_table(const ScenarioConfig& cfg, const NetworkSpec& spec,
                              const Dynamics& dyn, std::size_t dim) {
  ResultTable table({"S_A", "S_B", "R", "C12", "gap", "relaxing", "peripheral", "residual",
                     "iterations", "solver_distance", "status"});
  const auto ss = solve_steady_state(cfg, dyn, dim);
  const double s_b = von_neumann_entropy(cfg.baths.front().state);
  double s_a = kNaN, ratio = kNaN, c12 = kNaN;
  double st = ss.status;
  if (ss.rho) {
    s_a = von_neumann_entropy(*ss.rho);
    c12 = pair_concurrence(cfg, spec, *ss.rho);
    try {
      ratio = entropy_ratio(*ss.rho, cfg.baths.front().state);
    } catch (const UndefinedRatioError&) {
      if (st == status::kOk) st = status::kUndefinedRatio;
    }
  }
  table.add_row({s_a, s_b, ratio, c12, ss.gap, ss.relaxing, ss.peripheral, ss.residual,
                 ss.iterations, ss.solver_distance, st});
  return table;
}

ResultTable trajectory_table(const ScenarioConfig& cfg, const NetworkSpec& spec,
                             const Dynamics& dyn, std::size_t dim, std::size_t steps) {
  ResultTable table({"step", "S_A", "purity", "C12", "distance_to_previous", "status"});
  DensityMatrix cur = initial_state(cfg, dim);
  auto row = [&](std::size_t k, const DensityMatrix& rho, double dist) {
    const double purity = (rho.matrix() * rho.matrix()).trace().real();
    table.add_row({static_cast<double>(k), von_neumann_entropy(rho), purity,
                   pair_concurrence(cfg, spec, rho), dist, status::kOk});
  };
  row(0, cur, 0.0);
  for (std::size_t k = 1; k <= steps; ++k) {
    DensityMatrix next = dyn.step(cur);
    const double dist = trace_distance(next, cur);
    cur = std::move(next);
    row(k, cur, dist);
  }
  return table;
}

ResultTable spectrum_table(const Dynamics& dyn) {
  ResultTable table({"index", "re", "im", "modulus", "status"});
  const auto ev = superoperator_spectrum(dyn.superoperator());
  for (std::size_t k = 0; k < ev.size(); ++k) {
    table.add_row({static_cast<double>(k), ev[k].real(), ev[k].imag(), std::abs(ev[k]),
                   status::kOk});
  }
  return table;
}

ResultTable profile_table(const ScenarioConfig& cfg, const NetworkSpec& spec,
                          const Dynamics& dyn, std::size_t dim) {
  ResultTable table({"position", "site", "is_bath", "p0", "status"});
  const auto ss = solve_steady_state(cfg, dyn, dim);
  const auto sys_shape = spec.system_shape();

  auto bath_p0 = [&](std::size_t b) -> double {
    if (cfg.bath_columns == BathColumns::kInput || !ss.rho) {
      return cfg.baths[b].state(0, 0).real();
    }
    // Bath marginal right after colliding with the steady state.
    const bool alternating = dyn.cycle.size() > 1;
    const auto& ch = alternating ? dyn.cycle[b] : dyn.cycle.front();
    const std::size_t nanc = alternating ? 1 : cfg.baths.size();
    const std::size_t factor = cfg.n_sites + (alternating ? 0 : b);
    // In alternating mode bath b meets the state left by the baths before it.
    DensityMatrix incoming = *ss.rho;
    if (alternating) {
      for (std::size_t k = 0; k < b; ++k) incoming = dyn.cycle[k].apply(incoming);
    }
    std::vector<std::size_t> dims(cfg.n_sites + nanc, cfg.local_dim);
    const ComplexMatrix m =
        partial_trace(ch.joint_output(incoming), SubsystemShape(dims), {factor});
    return m(0, 0).real();
  };

  double position = 0.0;
  auto add_bath_rows = [&](bool at_site_zero) {
    for (std::size_t b = 0; b < cfg.baths.size(); ++b) {
      if ((cfg.baths[b].site == 0) != at_site_zero) continue;
      table.add_row({position++, static_cast<double>(cfg.baths[b].site), 1.0, bath_p0(b),
                     ss.status});
    }
  };
  add_bath_rows(true);
  for (std::size_t k = 0; k < cfg.n_sites; ++k) {
    double p0 = kNaN;
    if (ss.rho) p0 = partial_trace(ss.rho->matrix(), sys_shape, {k})(0, 0).real();
    table.add_row({position++, static_cast<double>(k), 0.0, p0, ss.status});
  }
  add_bath_rows(false);
  return table;
}

const char* analysis_name(const Analysis& a) {
  if (std::holds_alternative<FixedPointAnalysis>(a)) return "fixed_point";
  if (std::holds_alternative<TrajectoryAnalysis>(a)) return "trajectory";
  if (std::holds_alternative<SpectrumAnalysis>(a)) return "spectrum";
  return "profile";
}

}  // namespace

ResultTable run_scenario(const ScenarioConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const NetworkSpec spec = cfg.network();
  const Dynamics dyn = build_dynamics(cfg, spec);
  const std::size_t dim = spec.system_shape().total();

  ResultTable table;
  if (std::holds_alternative<FixedPointAnalysis>(cfg.analysis)) {
    table = fixed_point_table(cfg, spec, dyn, dim);
  } else if (const auto* tr = std::get_if<TrajectoryAnalysis>(&cfg.analysis)) {
    table = trajectory_table(cfg, spec, dyn, dim, tr->steps);
  } else if (std::holds_alternative<SpectrumAnalysis>(cfg.analysis)) {
    table = spectrum_table(dyn);
  } else {
    table = profile_table(cfg, spec, dyn, dim);
  }

  table.metadata = {{"config_digest", config_digest(cfg.source)},
                    {"version", MEDIAHOM_VERSION},
                    {"analysis", analysis_name(cfg.analysis)}};
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  table.volatile_metadata = {{"wall_time_s", format_real(wall)}};
  return table;
}

ResultTable sweep(const ScenarioConfig& cfg, const std::string& param,
                  const std::vector<json>& values, std::string label, std::size_t jobs) {
  json::json_pointer ptr;
  try {
    ptr = json::json_pointer(param);
  } catch (const json::exception& e) {
    throw ConfigError("sweep.param: '" + param + "' is not a JSON pointer (" + e.what() + ")");
  }
  if (param.empty() || !cfg.source.contains(ptr)) {
    throw ConfigError("sweep.param: path '" + param + "' does not exist in the config");
  }
  if (values.empty()) throw ConfigError("sweep.values: no values to sweep");
  const bool numeric = cfg.source.at(ptr).is_number();
  if (label.empty()) label = ptr.back();

  // Parse every point first so configuration errors abort before any work.
  std::vector<ScenarioConfig> points;
  points.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (numeric && !values[k].is_number()) {
      throw ConfigError("sweep.values[" + std::to_string(k) + "]: expected a number for '" +
                        param + "'");
    }
    json j = cfg.source;
    j[ptr] = values[k];
    try {
      points.push_back(parse_config(j));
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(e.what()) + " (sweep value " + std::to_string(k) + ")");
    }
  }

  std::vector<std::optional<ResultTable>> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < points.size(); k = next++) {
      try {
        results[k] = run_scenario(points[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, points.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<std::string> cols{label};
  for (const auto& c : results.front()->columns()) cols.push_back(c);
  ResultTable out(cols);
  for (std::size_t k = 0; k < results.size(); ++k) {
    const double key = numeric ? values[k].get<double>() : static_cast<double>(k);
    for (const auto& row : results[k]->rows()) {
      std::vector<double> r{key};
      r.insert(r.end(), row.begin(), row.end());
      out.add_row(std::move(r));
    }
  }
  out.metadata = {{"config_digest", config_digest(cfg.source)},
                  {"version", MEDIAHOM_VERSION},
                  {"analysis", analysis_name(cfg.analysis)},
                  {"sweep_param", param}};
  double wall = 0.0;
  for (const auto& r : results) {
    for (const auto& [k, v] : r->volatile_metadata) {
      double w = 0.0;
      if (k == "wall_time_s" && std::from_chars(v.data(), v.data() + v.size(), w).ec == std::errc{}) {
        wall += w;
      }
    }
  }
  out.volatile_metadata = {{"wall_time_s", format_real(wall)}};
  return out;
}

ResultTable sweep(const ScenarioConfig& cfg, std::size_t jobs) {
  if (!cfg.sweep) throw ConfigError("sweep: config has no sweep block");
  return sweep(cfg, cfg.sweep->param, cfg.sweep->values, cfg.sweep->label, jobs);
}

}  // namespace mediahom
