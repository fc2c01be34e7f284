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

// Convergence analysis of collision channels.
//
// A channel is relaxing when every input converges to one fixed point. The
// spectral criterion used here: exactly one superoperator eigenvalue lies
// within `tol` of the unit circle, and it is 1.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mediahom/collision.hpp"
#include "mediahom/qmath.hpp"

namespace mediahom {

struct ConvergenceReport {
  bool is_relaxing = false;
  std::string reason;
  std::optional<DensityMatrix> fixed_point;
  /// 1 - (second largest eigenvalue modulus).
  double spectral_gap = 0.0;
  std::size_t peripheral_count = 0;
  std::size_t iterations_used = 0;
  /// ||E(rho*) - rho*||_1 when a fixed point is present.
  double residual = 0.0;
  /// Set by haag_mixture_check when a mixture with a relaxing component is
  /// reported as not relaxing.
  bool theorem_violation = false;
  /// Superoperator eigenvalues sorted by decreasing modulus.
  std::vector<cplx> eigenvalues;
};

/// Eigenvalues of S sorted by decreasing modulus.
std::vector<cplx> superoperator_spectrum(const Superoperator& s);

/// Un-vectorized eigenvector of the eigenvalue-1 eigenspace, Hermitian-symmetrized
/// and trace-normalized. Throws DegeneracyError if that eigenspace is not
/// one-dimensional and NumericalError if the result is not a valid state.
DensityMatrix spectral_fixed_point(const Superoperator& s);

ConvergenceReport is_relaxing(const Superoperator& s, double tol = tol::kPeripheral);

struct IterativeFixedPoint {
  DensityMatrix state;
  std::size_t iterations = 0;
  /// Last ||rho_n - rho_{n-1}||_1.
  double residual = 0.0;
  /// False when max_iter was reached first; consult is_relaxing in that case.
  bool converged = false;
};

/// Iterates until ||rho_n - rho_{n-1}||_1 <= tol or max_iter collisions.
IterativeFixedPoint iterative_fixed_point(const CollisionChannel& ch,
                                          const DensityMatrix& rho0, double tol,
                                          std::size_t max_iter);

/// Number of independent eigenvectors of H_total of the product form
/// |E> (x) |phi>, where phi lives on the last factor of `shape`. Each eigenspace
/// contributes the dimension of its intersection with H_rest (x) phi.
std::size_t factorized_eigenvector_count(const ComplexMatrix& h_total,
                                         const SubsystemShape& shape,
                                         const ComplexVector& phi);

/// Analyzes p * relaxing + (1 - p) * other. p must lie in (0, 1].
ConvergenceReport haag_mixture_check(const Superoperator& relaxing,
                                     const Superoperator& other, double p,
                                     double tol = tol::kPeripheral);

/// f_n = ||M_n(rho1) - M_n(rho2)||_1 for n = 0..seq.size(), M_n = E_n o ... o E_1.
std::vector<double> forgetting_metric(const std::vector<CollisionChannel>& seq,
                                      const DensityMatrix& rho1, const DensityMatrix& rho2);

/// True when series[k+1] <= series[k] + slack for all k.
bool is_non_increasing(const std::vector<double>& series, double slack = tol::kMonotoneSlack);

struct InvarianceCheck {
  double commutator_norm = 0.0;  // max-entry norm of [U, rho* (x) omega]
  bool pass = false;
};

InvarianceCheck check_invariance(const ComplexMatrix& u, const DensityMatrix& rho_star,
                                 const DensityMatrix& omega, double tol);

/// S(rho*) / S(omega). Throws UndefinedRatioError when S(omega) is below
/// tol::kEntropyFloor.
double entropy_ratio(const DensityMatrix& rho_star, const DensityMatrix& omega);

}  // namespace mediahom
