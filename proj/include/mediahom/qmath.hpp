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

// Dense complex linear algebra for small composite quantum systems.
//
// Index convention for composite systems: factor 0 of a SubsystemShape is the
// leftmost tensor factor and the most significant block of the flat index,
// i.e. for dims [d0, d1, ..., dk] the basis state |i0 i1 ... ik> has flat
// index ((i0 * d1 + i1) * d2 + i2) ... This matches Kronecker-product order
// and is used by every module.
//
// Trace distances use the un-halved trace norm ||A||_1 = Tr sqrt(A^dag A),
// so two orthogonal pure states are at distance 2.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mediahom/tolerances.hpp"

namespace mediahom {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Ordered list of local dimensions of a composite system.
class SubsystemShape {
 public:
  explicit SubsystemShape(std::vector<std::size_t> dims);

  std::size_t factors() const noexcept { return dims_.size(); }
  std::size_t dim(std::size_t factor) const;
  std::size_t total() const noexcept { return total_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  /// Throws ShapeError unless total() == n.
  void require_total(std::size_t n, const char* what) const;

  bool operator==(const SubsystemShape&) const = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

struct ValidationReport {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool passed = false;
};

/// Reports how far a square matrix is from being a density matrix. Never throws
/// for square input.
ValidationReport validate_density(const ComplexMatrix& rho,
                                  double tol = tol::kStructural);

/// Hermitian, positive-semidefinite, unit-trace matrix. Immutable.
class DensityMatrix {
 public:
  /// Validates at `tolerance`; throws ArgumentError naming the failing check.
  explicit DensityMatrix(ComplexMatrix m, double tolerance = tol::kStructural);

  static DensityMatrix pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);
  /// p|0><0| + (1-p)|1><1| on a qubit.
  static DensityMatrix diag_qubit(double p);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

// ---- construction helpers ------------------------------------------------

ComplexMatrix identity(std::size_t dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// Computational basis vector |index> in dimension dim.
ComplexVector basis_vector(std::size_t dim, std::size_t index);

// ---- structure -----------------------------------------------------------

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product in list order. Empty list -> ArgumentError.
ComplexMatrix tensor(std::span<const ComplexMatrix> ops);
ComplexMatrix tensor(std::initializer_list<ComplexMatrix> ops);

/// Reduced operator on the factors listed in `keep` (any order; the result
/// keeps the factors in ascending shape order).
ComplexMatrix partial_trace(const ComplexMatrix& op, const SubsystemShape& shape,
                            std::vector<std::size_t> keep);

/// Largest |a_ij| entry.
double max_abs(const ComplexMatrix& a);
/// max |a_ij - conj(a_ji)|.
double hermiticity_defect(const ComplexMatrix& a);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// ---- spectra -------------------------------------------------------------

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // orthonormal columns
};

/// Throws ArgumentError for input that is not Hermitian within kHermitianInput.
HermitianEigen hermitian_eig(const ComplexMatrix& h);

struct GeneralEigen {
  ComplexVector values;
  ComplexMatrix vectors;  // right eigenvectors, empty when not requested
};

/// Eigen-decomposition of a general square complex matrix (LAPACK zgeev).
GeneralEigen general_eig(const ComplexMatrix& a, bool want_vectors);

/// exp(-i H t) via Hermitian eigendecomposition.
ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double t);

RealVector singular_values(const ComplexMatrix& a);

// ---- functionals ---------------------------------------------------------

/// Sum of singular values. Non-square -> ShapeError.
double trace_norm(const ComplexMatrix& a);

/// ||rho - sigma||_1 (no 1/2 factor).
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// Wootters concurrence of a two-qubit state. dim != 4 -> ShapeError.
double concurrence(const DensityMatrix& rho);

/// Hermitian part (X + X^dag) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& x);

}  // namespace mediahom
