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

#include "mediahom/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mediahom/errors.hpp"

namespace mediahom {

namespace {

struct SpectralAnalysis {
  GeneralEigen eig;
  std::vector<Eigen::Index> order;  // decreasing modulus
  Eigen::Index unit_index = -1;     // eigenvalue taken as "1", -1 if none
  std::size_t fixed_space_dim = 0;
  std::size_t peripheral = 0;
  double gap = 0.0;
};

SpectralAnalysis analyze(const Superoperator& s, double peripheral_tol, bool vectors) {
  SpectralAnalysis a;
  a.eig = general_eig(s.matrix(), vectors);
  const auto& w = a.eig.values;
  a.order.resize(static_cast<std::size_t>(w.size()));
  std::iota(a.order.begin(), a.order.end(), Eigen::Index{0});
  std::stable_sort(a.order.begin(), a.order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return std::abs(w(i)) > std::abs(w(j));
  });

  // Of the eigenvalues on the unit circle, take the one with maximal real part.
  double best_re = -std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    const double mod = std::abs(w(k));
    if (mod > 1.0 - peripheral_tol) ++a.peripheral;
    if (std::abs(mod - 1.0) <= tol::kDegeneracy && w(k).real() > best_re) {
      best_re = w(k).real();
      a.unit_index = k;
    }
  }
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    if (std::abs(w(k) - cplx(1.0, 0.0)) <= tol::kDegeneracy) ++a.fixed_space_dim;
  }
  a.gap = w.size() > 1 ? 1.0 - std::abs(w(a.order[1])) : 1.0;
  return a;
}

// Fixed point from the selected eigenvector; throws on failure.
DensityMatrix extract_fixed_point(const Superoperator& s, const SpectralAnalysis& a) {
  if (a.unit_index < 0 ||
      std::abs(a.eig.values(a.unit_index) - cplx(1.0, 0.0)) > tol::kDegeneracy) {
    throw NumericalError("spectral_fixed_point: no eigenvalue within tolerance of 1");
  }
  if (a.fixed_space_dim > 1) {
    std::ostringstream os;
    os << "spectral_fixed_point: eigenvalue-1 eigenspace has dimension "
       << a.fixed_space_dim << " (channel is not relaxing)";
    throw DegeneracyError(os.str());
  }
  ComplexMatrix x = unvectorize(a.eig.vectors.col(a.unit_index), s.dim());
  const cplx tr = x.trace();
  if (std::abs(tr) < 1e-12) {
    throw NumericalError("spectral_fixed_point: fixed-point eigenvector is traceless");
  }
  x = hermitian_part(x / tr);
  const auto report = validate_density(x, tol::kOutput);
  if (!report.passed) {
    std::ostringstream os;
    os << "spectral_fixed_point: symmetrized eigenvector is not a state (min eigenvalue "
       << report.min_eigenvalue << ")";
    throw NumericalError(os.str());
  }
  DensityMatrix rho(std::move(x), tol::kOutput);
  const double residual = trace_norm(s.apply(rho.matrix()) - rho.matrix());
  if (residual > tol::kFixedPointResidual) {
    std::ostringstream os;
    os << "spectral_fixed_point: residual " << residual << " exceeds "
       << tol::kFixedPointResidual;
    throw NumericalError(os.str());
  }
  return rho;
}

}  // namespace

std::vector<cplx> superoperator_spectrum(const Superoperator& s) {
  const auto a = analyze(s, tol::kPeripheral, false);
  std::vector<cplx> out;
  out.reserve(a.order.size());
  for (auto k : a.order) out.push_back(a.eig.values(k));
  return out;
}

DensityMatrix spectral_fixed_point(const Superoperator& s) {
  return extract_fixed_point(s, analyze(s, tol::kPeripheral, true));
}

ConvergenceReport is_relaxing(const Superoperator& s, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("is_relaxing: tolerance must be positive");
  const auto a = analyze(s, tol, true);
  ConvergenceReport r;
  r.spectral_gap = a.gap;
  r.peripheral_count = a.peripheral;
  for (auto k : a.order) r.eigenvalues.push_back(a.eig.values(k));

  std::ostringstream why;
  if (a.fixed_space_dim == 0) {
    why << "no eigenvalue equal to 1 (map is not trace preserving?)";
  } else if (a.fixed_space_dim > 1) {
    why << "eigenvalue 1 has multiplicity " << a.fixed_space_dim;
  } else if (a.peripheral > 1) {
    why << a.peripheral << " eigenvalues on the unit circle";
  }
  if (!why.str().empty()) {
    r.reason = why.str();
    return r;
  }
  try {
    r.fixed_point = extract_fixed_point(s, a);
    r.residual = trace_norm(s.apply(r.fixed_point->matrix()) - r.fixed_point->matrix());
    r.is_relaxing = true;
    r.reason = "unique peripheral eigenvalue 1";
  } catch (const Error& e) {
    r.reason = std::string("spectrum is relaxing but fixed point extraction failed: ") +
               e.what();
  }
  return r;
}

IterativeFixedPoint iterative_fixed_point(const CollisionChannel& ch,
                                          const DensityMatrix& rho0, double tol,
                                          std::size_t max_iter) {
  if (!(tol > 0.0)) throw ArgumentError("iterative_fixed_point: tol must be positive");
  DensityMatrix cur = rho0;
  double residual = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= max_iter; ++n) {
    DensityMatrix next = ch.apply(cur);
    residual = trace_distance(next, cur);
    cur = std::move(next);
    if (residual <= tol) return {std::move(cur), n, residual, true};
  }
  return {std::move(cur), max_iter, residual, false};
}

std::size_t factorized_eigenvector_count(const ComplexMatrix& h_total,
                                         const SubsystemShape& shape,
                                         const ComplexVector& phi) {
  shape.require_total(static_cast<std::size_t>(h_total.rows()),
                      "factorized_eigenvector_count");
  const auto da = static_cast<Eigen::Index>(shape.dim(shape.factors() - 1));
  if (phi.size() != da) {
    throw ShapeError("factorized_eigenvector_count: phi dimension differs from last factor");
  }
  if (std::abs(phi.norm() - 1.0) > tol::kStructural) {
    throw ArgumentError("factorized_eigenvector_count: phi is not normalized");
  }
  const auto eig = hermitian_eig(h_total);
  const auto n = eig.values.size();
  const auto drest = n / da;

  // (I (x) <phi|) applied to the eigenvectors.
  ComplexMatrix proj(drest, n);
  for (Eigen::Index r = 0; r < drest; ++r) {
    proj.row(r) = phi.adjoint() * eig.vectors.middleRows(r * da, da);
  }

  std::size_t count = 0;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && eig.values(end) - eig.values(end - 1) <= tol::kEigenspaceGrouping) ++end;
    // For an orthonormal basis V of the eigenspace, a unit vector v in
    // H_rest (x) phi lies in the eigenspace iff it is an eigenvector of
    // W W^dag with eigenvalue 1, W = (I (x) <phi|) V.
    const RealVector sv = singular_values(proj.middleCols(start, end - start));
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
      if (sv(k) * sv(k) >= 1.0 - tol::kFactorization) ++count;
    }
    start = end;
  }
  return count;
}

ConvergenceReport haag_mixture_check(const Superoperator& relaxing,
                                     const Superoperator& other, double p, double tol) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw ArgumentError("haag_mixture_check: p must lie in (0, 1]");
  }
  auto r = is_relaxing(mix(p, relaxing, other), tol);
  if (!r.is_relaxing) {
    r.theorem_violation = true;
    r.reason = "mixture with a relaxing component reported non-relaxing: " + r.reason;
  }
  return r;
}

std::vector<double> forgetting_metric(const std::vector<CollisionChannel>& seq,
                                      const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (seq.empty()) throw ArgumentError("forgetting_metric: empty channel sequence");
  if (rho1.dim() != rho2.dim()) throw ShapeError("forgetting_metric: state dimensions differ");
  std::vector<double> f;
  f.reserve(seq.size() + 1);
  DensityMatrix a = rho1;
  DensityMatrix b = rho2;
  f.push_back(trace_distance(a, b));
  for (const auto& ch : seq) {
    a = ch.apply(a);
    b = ch.apply(b);
    f.push_back(trace_distance(a, b));
  }
  return f;
}

bool is_non_increasing(const std::vector<double>& series, double slack) {
  for (std::size_t k = 1; k < series.size(); ++k) {
    if (series[k] > series[k - 1] + slack) return false;
  }
  return true;
}

InvarianceCheck check_invariance(const ComplexMatrix& u, const DensityMatrix& rho_star,
                                 const DensityMatrix& omega, double tol) {
  const auto n = static_cast<Eigen::Index>(rho_star.dim() * omega.dim());
  if (u.rows() != n || u.cols() != n) {
    throw ShapeError("check_invariance: unitary dimension differs from rho* (x) omega");
  }
  const double c = max_abs(commutator(u, kron(rho_star.matrix(), omega.matrix())));
  return {c, c <= tol};
}

double entropy_ratio(const DensityMatrix& rho_star, const DensityMatrix& omega) {
  const double sb = von_neumann_entropy(omega);
  if (sb < tol::kEntropyFloor) {
    std::ostringstream os;
    os << "entropy_ratio: bath entropy " << sb << " is below the floor "
       << tol::kEntropyFloor << " (pure bath state)";
    throw UndefinedRatioError(os.str());
  }
  return von_neumann_entropy(rho_star) / sb;
}

}  // namespace mediahom
