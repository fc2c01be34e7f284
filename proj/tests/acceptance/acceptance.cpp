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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "mediahom/collision.hpp"
#include "mediahom/config.hpp"
#include "mediahom/convergence.hpp"
#include "mediahom/errors.hpp"
#include "mediahom/network.hpp"
#include "mediahom/random.hpp"
#include "mediahom/scenario.hpp"

using namespace mediahom;
namespace rnd = mediahom::random;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      detail << what << "; ";
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ComplexMatrix power(const ComplexMatrix& m, std::size_t n) {
  ComplexMatrix out = m;
  for (std::size_t k = 1; k < n; ++k) out = kron(out, m);
  return out;
}

NetworkSpec chain(std::size_t n, NetworkModel model, std::size_t d,
                  std::vector<BathAttachment> baths) {
  NetworkSpec spec;
  spec.graph = chain_graph(n, 1.0);
  spec.local_dim = d;
  spec.model = model;
  spec.baths = std::move(baths);
  return spec;
}

CollisionChannel single_bath_channel(const NetworkSpec& spec, const DensityMatrix& omega,
                                     double t) {
  return build_channel(system_hamiltonian(spec), bath_interaction(spec, 0), omega, t);
}

ScenarioConfig shipped(const std::string& name) {
  return load_config(std::string(MEDIAHOM_CONFIG_DIR) + "/" + name);
}

// ---- criteria ------------------------------------------------------------

void mediated_homogenization(Outcome& o) {
  const auto start = Clock::now();
  rnd::Rng rng(1001);
  const auto spec = chain(3, SwapModel{}, 2, {{"B", 2}});
  double worst_iter = 0.0, worst_spec = 0.0;
  std::size_t max_steps = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto omega = rnd::mixed_state(2, rng);
    const DensityMatrix target(power(omega.matrix(), 3));
    const auto ch = single_bath_channel(spec, omega, 0.5);
    DensityMatrix rho = DensityMatrix::pure(basis_vector(8, 0));
    std::size_t n = 0;
    while (n < 5000 && trace_distance(rho, target) > 1e-6) {
      rho = ch.apply(rho);
      ++n;
    }
    worst_iter = std::max(worst_iter, trace_distance(rho, target));
    max_steps = std::max(max_steps, n);
    const auto fp = spectral_fixed_point(superoperator_matrix(ch));
    worst_spec = std::max(worst_spec, trace_distance(fp, target));
  }
  const double elapsed = seconds_since(start);
  o.require(worst_iter <= 1e-6, "iterated state not within 1e-6");
  o.require(worst_spec <= 1e-7, "spectral fixed point not within 1e-7");
  o.require(elapsed < 10.0, "runtime above 10 s");
  o.detail << "max steps " << max_steps << ", iter dist " << worst_iter << ", spectral dist "
           << worst_spec << ", " << elapsed << " s";
}

void qudit_pair(Outcome& o) {
  rnd::Rng rng(1002);
  const auto spec = chain(2, SwapModel{}, 3, {{"B", 1}});
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const auto omega = rnd::mixed_state(3, rng);
    const auto fp = spectral_fixed_point(superoperator_matrix(single_bath_channel(spec, omega, 0.5)));
    worst = std::max(worst, trace_distance(fp, DensityMatrix(kron(omega.matrix(), omega.matrix()))));
  }
  o.require(worst <= 1e-6, "fixed point not within 1e-6 of omega (x) omega");
  o.detail << "d=3, 5 random baths, max dist " << worst;
}

void diagonal_xxz(Outcome& o) {
  const auto omega = DensityMatrix::diag_qubit(0.7);
  const DensityMatrix target(power(omega.matrix(), 3));
  for (double delta : {0.0, 0.5, 2.0}) {
    const auto ch = single_bath_channel(chain(3, XxzModel{delta}, 2, {{"B", 2}}), omega, 0.5);
    const auto rep = is_relaxing(superoperator_matrix(ch));
    const double dist = rep.fixed_point ? trace_distance(*rep.fixed_point, target) : 1.0;
    const auto inv = check_invariance(ch.joint_unitary(), target, omega, 1e-9);
    o.require(rep.is_relaxing && dist <= 1e-6, "delta " + std::to_string(delta) + " fixed point");
    o.require(inv.pass, "delta " + std::to_string(delta) + " invariance");
    o.detail << "delta " << delta << ": dist " << dist << ", [U,rho(x)w] " << inv.commutator_norm
             << "; ";
  }
}

void fig3(Outcome& o) {
  const auto cfg = shipped("fig3.json");
  const auto table = sweep(cfg, 1);
  const std::size_t last = table.rows().size() - 1;
  bool all_relaxing = true;
  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    all_relaxing = all_relaxing && table.at(r, "relaxing") == 1.0;
  }
  const double s_a_pure = table.at(0, "S_A");
  o.require(table.at(0, "p") == 0.0 && std::abs(table.at(last, "p") - 0.999) < 1e-12,
            "grid must span [0, 0.999]");
  o.require(all_relaxing, "a sampled p is not relaxing");
  o.require(table.at(0, "status") == status::kUndefinedRatio,
            "p = 0 does not report an undefined ratio");
  o.require(s_a_pure > 0.1, "p = 0 convergence point is not mixed");

  const auto ends = sweep(cfg, cfg.sweep->param, {0.9, 0.99, 0.999}, "p", 1);
  std::vector<double> tail;
  for (std::size_t r = 0; r < 3; ++r) {
    all_relaxing = all_relaxing && ends.at(r, "relaxing") == 1.0;
    tail.push_back(ends.at(r, "R"));
  }
  o.require(all_relaxing, "an endpoint p is not relaxing");
  o.require(tail[0] > tail[1] && tail[1] > tail[2],
            "R does not approach N monotonically on 0.9, 0.99, 0.999");
  o.require(std::abs(tail[2] - 4.0) <= 0.5, "R(0.999) not within 0.5 of 4");
  // The library call itself must raise at p = 0.
  bool raised = false;
  try {
    entropy_ratio(DensityMatrix::maximally_mixed(16), DensityMatrix::pure(basis_vector(2, 0)));
  } catch (const UndefinedRatioError&) {
    raised = true;
  }
  o.require(raised, "entropy_ratio did not raise for a pure bath");
  o.detail << table.rows().size() + 3 << " points relaxing, R(0.9,0.99,0.999) = ";
  for (double r : tail) o.detail << r << " ";
  o.detail << ", S_A(p=0) = " << s_a_pure;
}

void fig4(Outcome& o) {
  const auto table = sweep(shipped("fig4.json"), 1);
  bool all_relaxing = true;
  double max_c = 0.0, s_a_one = 1.0, c_one = 1.0, delta_max_c = 0.0;
  bool saw_one = false;
  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    all_relaxing = all_relaxing && table.at(r, "relaxing") == 1.0;
    const double delta = table.at(r, "delta");
    if (table.at(r, "C12") > max_c) {
      max_c = table.at(r, "C12");
      delta_max_c = delta;
    }
    if (std::abs(delta - 1.0) < 1e-12) {
      saw_one = true;
      s_a_one = table.at(r, "S_A");
      c_one = table.at(r, "C12");
    }
  }
  o.require(saw_one, "grid misses delta = 1");
  o.require(s_a_one <= 1e-6, "S_A at delta = 1 above 1e-6");
  o.require(c_one <= 1e-6, "C12 at delta = 1 above 1e-6");
  o.require(max_c > 0.01, "no entangled convergence point");
  o.require(all_relaxing, "a grid point is not relaxing");
  o.detail << table.rows().size() << " points relaxing, delta=1: S_A " << s_a_one << ", C12 "
           << c_one << "; max C12 " << max_c << " at delta " << delta_max_c;
}

void fig5(Outcome& o) {
  const auto start = Clock::now();
  auto cfg = shipped("fig5.json");
  // Steady-state diagnostics for both interaction times.
  nlohmann::json j = cfg.source;
  j["analysis"] = "fixed_point";
  j["solver"] = "both";
  const auto table = sweep(parse_config(j), 1);
  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    const double t = table.at(r, "t");
    const double d = table.at(r, "solver_distance");
    o.require(table.at(r, "relaxing") == 1.0, "t=" + std::to_string(t) + " not relaxing");
    o.require(d <= 1e-7, "t=" + std::to_string(t) + " solvers disagree");
    o.detail << "t=" << t << ": gap " << table.at(r, "gap") << ", solver dist " << d << "; ";
  }
  o.require(table.rows().size() == 2, "expected t in {0.5, 1.0}");
  // Pure |0> baths at both ends cool the chain to |0...0>.
  const auto spec = cfg.network();
  const auto zero = DensityMatrix::pure(basis_vector(2, 0));
  const auto ch = build_two_bath_channel(system_hamiltonian(spec), bath_interaction(spec, 0),
                                         bath_interaction(spec, 1), zero, zero, 0.5);
  const auto rep = is_relaxing(superoperator_matrix(ch));
  const double dist = rep.fixed_point
                          ? trace_distance(*rep.fixed_point, DensityMatrix::pure(basis_vector(32, 0)))
                          : 1.0;
  o.require(rep.is_relaxing && dist <= 1e-6, "p=q=1 steady state is not |0...0>");
  const double elapsed = seconds_since(start);
  o.require(elapsed < 120.0, "runtime above 2 min");
  o.detail << "p=q=1 dist " << dist << ", " << elapsed << " s";
}

void haag(Outcome& o) {
  rnd::Rng rng(1007);
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  const auto spec = chain(2, SwapModel{}, 2, {{"B", 1}});
  int relaxing = 0;
  double min_gap = 1.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto base = superoperator_matrix(single_bath_channel(spec, rnd::mixed_state(2, rng), 0.5));
    const auto other = Superoperator::unitary_conjugation(rnd::unitary(4, rng));
    const auto rep = haag_mixture_check(base, other, weight(rng));
    if (rep.is_relaxing && rep.spectral_gap > 0.0 && !rep.theorem_violation) ++relaxing;
    min_gap = std::min(min_gap, rep.spectral_gap);
  }
  o.require(relaxing == 50, "not every mixture is relaxing");
  o.detail << relaxing << "/50 relaxing, min gap " << min_gap;
}

void forgetting(Outcome& o) {
  rnd::Rng rng(1008);
  std::uniform_real_distribution<double> weight(0.5, 1.0);
  const ComplexMatrix h_sys = ComplexMatrix::Zero(2, 2);
  const auto h_int = swap_operator(SubsystemShape({2, 2}), 0, 1);
  bool monotone = true;
  double worst_final = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    ControllerSequence seq{rnd::mixed_state(2, rng), 0.5, {}};
    for (int l = 0; l < 500; ++l) seq.steps.push_back({weight(rng), rnd::mixed_state(2, rng)});
    const auto chans = imperfect_controller_sequence(h_sys, h_int, 0.5, seq);
    const auto f = forgetting_metric(chans, rnd::mixed_state(2, rng), rnd::mixed_state(2, rng));
    monotone = monotone && is_non_increasing(f, 1e-10);
    worst_final = std::max(worst_final, f.back());
  }
  o.require(monotone, "an f_n series increases");
  o.require(worst_final < 1e-3, "f_500 not below 1e-3");
  o.detail << "20 sequences monotone, max f_500 " << worst_final;
}

void oracle_equivalences(Outcome& o) {
  rnd::Rng rng(1009);
  struct Case {
    std::string name;
    ComplexMatrix h_total;
    CollisionChannel ch;
  };
  std::vector<Case> cases;
  const double t = 0.5;
  auto add_single = [&](const std::string& name, const NetworkSpec& spec) {
    const auto omega = rnd::mixed_state(spec.local_dim, rng);
    const ComplexMatrix h_total =
        kron(system_hamiltonian(spec), identity(spec.local_dim)) + bath_interaction(spec, 0);
    cases.push_back({name, h_total, single_bath_channel(spec, omega, t)});
  };
  add_single("swap N=3", chain(3, SwapModel{}, 2, {{"B", 2}}));
  add_single("xxz N=3", chain(3, XxzModel{0.5}, 2, {{"B", 1}}));
  add_single("qutrit N=2", chain(2, SwapModel{}, 3, {{"B", 0}}));
  {
    const auto spec = chain(2, XxzModel{1.0}, 2, {{"B", 1}, {"C", 0}});
    const auto hb = bath_interaction(spec, 0);
    const auto hc = bath_interaction(spec, 1);
    cases.push_back({"two-bath N=2", kron(system_hamiltonian(spec), identity(4)) + hb + hc,
                     build_two_bath_channel(system_hamiltonian(spec), hb, hc,
                                            rnd::mixed_state(2, rng), rnd::mixed_state(2, rng), t)});
  }
  double sup_err = 0.0, kraus_err = 0.0, series_err = 0.0;
  for (const auto& c : cases) {
    const auto sup = superoperator_matrix(c.ch);
    for (int trial = 0; trial < 20; ++trial) {
      const auto rho = rnd::mixed_state(c.ch.system_dim(), rng);
      const auto direct = c.ch.apply(rho).matrix();
      sup_err = std::max(sup_err, max_abs(sup.apply(rho.matrix()) - direct));
      ComplexMatrix via_kraus = ComplexMatrix::Zero(direct.rows(), direct.cols());
      for (const auto& k : c.ch.kraus()) via_kraus += k * rho.matrix() * k.adjoint();
      kraus_err = std::max(kraus_err, max_abs(via_kraus - direct));
      if (trial < 3) {
        const auto series = oracle::direct_collision(c.h_total, t, rho.matrix(),
                                                     c.ch.ancilla_state().matrix());
        series_err = std::max(series_err, max_abs(series - direct));
      }
    }
  }
  double tensor_err = 0.0, trace_err = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = rnd::ginibre(2, 2, rng);
    const auto b = rnd::ginibre(4, 4, rng);
    tensor_err = std::max(tensor_err, max_abs(kron(a, b) - oracle::kron_by_index(a, b)));
    const auto rho = rnd::mixed_state(8, rng).matrix();
    trace_err = std::max(trace_err, max_abs(partial_trace(rho, SubsystemShape({2, 2, 2}), {0, 2}) -
                                            oracle::trace_middle_qubit(rho)));
  }
  o.require(sup_err <= 1e-10, "superoperator vs direct above 1e-10");
  o.require(kraus_err <= 1e-10, "Kraus vs direct above 1e-10");
  o.require(series_err <= 1e-10, "direct vs power-series oracle above 1e-10");
  o.require(tensor_err <= 1e-12, "tensor vs index oracle above 1e-12");
  o.require(trace_err <= 1e-12, "partial trace vs index oracle above 1e-12");
  o.detail << cases.size() << " channels x 20 states: superop " << sup_err << ", Kraus "
           << kraus_err << ", series " << series_err << "; tensor " << tensor_err
           << ", partial trace " << trace_err;
}

void structural_commutators(Outcome& o) {
  rnd::Rng rng(1010);
  NetworkSpec ring;
  ring.graph = CouplingGraph(4, {{0, 1, 1.0}, {1, 2, 0.7}, {2, 3, 1.3}, {3, 0, 0.4}});
  const auto h_ring = swap_network_hamiltonian(ring);
  const auto h_chain3 = swap_network_hamiltonian(chain(3, SwapModel{}, 3, {}));
  double worst_theta = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    worst_theta = std::max(worst_theta,
                           max_abs(commutator(h_ring, power(rnd::ginibre(2, 2, rng), 4))));
    worst_theta = std::max(worst_theta,
                           max_abs(commutator(h_chain3, power(rnd::ginibre(3, 3, rng), 3))));
  }
  double worst_m = 0.0;
  for (std::size_t d : {2u, 3u}) {
    const auto spec = chain(3, SwapModel{}, d, {{"B", 2}});
    const ComplexMatrix h = kron(system_hamiltonian(spec), identity(d)) + bath_interaction(spec, 0);
    const auto m = excitation_observable(rnd::pure_state(d, rng), spec.joint_shape());
    worst_m = std::max(worst_m, max_abs(commutator(m, h)));
  }
  o.require(worst_theta <= 1e-10, "[H_A, Theta^N] above 1e-10");
  o.require(worst_m <= 1e-10, "[M_AB, H_A + H_I] above 1e-10");
  o.detail << "[H_A,Theta^N] " << worst_theta << ", [M,H] " << worst_m;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"mediated homogenization, swap chain N=3", mediated_homogenization},
      {"qudit swap pair d=3", qudit_pair},
      {"diagonal-bath XXZ homogenization", diagonal_xxz},
      {"XX chain with |0>/|-> bath sweep", fig3},
      {"XXZ anisotropy sweep with |-> bath", fig4},
      {"two-bath Heisenberg chain", fig5},
      {"mixtures with a relaxing channel", haag},
      {"forgetting under imperfect controllers", forgetting},
      {"oracle equivalences", oracle_equivalences},
      {"structural commutators", structural_commutators},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = Clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s  %2zu  %-42s  %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), o.detail.str().c_str(), seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
