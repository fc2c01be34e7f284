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

#include "mediahom/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <lapacke.h>

#include "mediahom/errors.hpp"

namespace mediahom {

namespace {

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream os;
    os << what << ": expected a non-empty square matrix, got " << a.rows() << "x"
       << a.cols();
    throw ShapeError(os.str());
  }
}

}  // namespace

// ---- SubsystemShape ------------------------------------------------------

SubsystemShape::SubsystemShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ArgumentError("SubsystemShape: no factors");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 2) {
      std::ostringstream os;
      os << "SubsystemShape: factor " << i << " has local dimension " << dims_[i]
         << " (< 2)";
      throw ArgumentError(os.str());
    }
    total_ *= dims_[i];
  }
}

std::size_t SubsystemShape::dim(std::size_t factor) const {
  if (factor >= dims_.size()) {
    std::ostringstream os;
    os << "SubsystemShape: factor " << factor << " out of range (" << dims_.size()
       << " factors)";
    throw ArgumentError(os.str());
  }
  return dims_[factor];
}

void SubsystemShape::require_total(std::size_t n, const char* what) const {
  if (n != total_) {
    std::ostringstream os;
    os << what << ": operator dimension " << n << " does not match shape total "
       << total_;
    throw ShapeError(os.str());
  }
}

// ---- validation ----------------------------------------------------------

ValidationReport validate_density(const ComplexMatrix& rho, double tolerance) {
  ValidationReport r;
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    r.hermiticity_defect = r.trace_defect = std::numeric_limits<double>::infinity();
    r.min_eigenvalue = -std::numeric_limits<double>::infinity();
    return r;
  }
  r.hermiticity_defect = hermiticity_defect(rho);
  r.trace_defect = std::abs(rho.trace() - cplx(1.0, 0.0));
  if (!rho.allFinite()) {
    r.min_eigenvalue = -std::numeric_limits<double>::infinity();
    return r;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(rho),
                                                  Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.passed = r.hermiticity_defect <= tolerance && r.trace_defect <= tolerance &&
             r.min_eigenvalue >= -tolerance;
  return r;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tolerance) : m_(std::move(m)) {
  require_square(m_, "DensityMatrix");
  const auto r = validate_density(m_, tolerance);
  if (!r.passed) {
    std::ostringstream os;
    os << "DensityMatrix: invalid state (hermiticity defect " << r.hermiticity_defect
       << ", trace defect " << r.trace_defect << ", min eigenvalue " << r.min_eigenvalue
       << ", tolerance " << tolerance << ")";
    throw ArgumentError(os.str());
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (std::abs(n - 1.0) > tol::kStructural) {
    throw ArgumentError("DensityMatrix::pure: state vector is not normalized");
  }
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::diag_qubit(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("diag_qubit: p outside [0,1]");
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = p;
  m(1, 1) = 1.0 - p;
  return DensityMatrix(std::move(m));
}

// ---- helpers -------------------------------------------------------------

ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim),
                                 static_cast<Eigen::Index>(dim));
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexVector basis_vector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ArgumentError("basis_vector: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix tensor(std::span<const ComplexMatrix> ops) {
  if (ops.empty()) throw ArgumentError("tensor: empty operator list");
  ComplexMatrix out = ops.front();
  for (std::size_t k = 1; k < ops.size(); ++k) out = kron(out, ops[k]);
  return out;
}

ComplexMatrix tensor(std::initializer_list<ComplexMatrix> ops) {
  return tensor(std::span<const ComplexMatrix>(ops.begin(), ops.size()));
}

ComplexMatrix partial_trace(const ComplexMatrix& op, const SubsystemShape& shape,
                            std::vector<std::size_t> keep) {
  require_square(op, "partial_trace");
  shape.require_total(static_cast<std::size_t>(op.rows()), "partial_trace");
  if (keep.empty()) throw ArgumentError("partial_trace: keep set is empty");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw ArgumentError("partial_trace: duplicate factor in keep set");
  }
  if (keep.back() >= shape.factors()) {
    throw ArgumentError("partial_trace: keep index out of range");
  }

  const std::size_t nf = shape.factors();
  std::vector<bool> kept(nf, false);
  for (auto k : keep) kept[k] = true;

  // Strides of each factor in the flat index (factor 0 most significant).
  std::vector<std::size_t> stride(nf);
  std::size_t s = 1;
  for (std::size_t f = nf; f-- > 0;) {
    stride[f] = s;
    s *= shape.dim(f);
  }

  // Flat offsets contributed by the kept factors and by the traced factors.
  auto offsets = [&](bool want_kept) {
    std::vector<std::size_t> offs{0};
    for (std::size_t f = 0; f < nf; ++f) {
      if (kept[f] != want_kept) continue;
      std::vector<std::size_t> next;
      next.reserve(offs.size() * shape.dim(f));
      for (auto o : offs)
        for (std::size_t i = 0; i < shape.dim(f); ++i) next.push_back(o + i * stride[f]);
      offs = std::move(next);
    }
    return offs;
  };
  const auto kept_off = offsets(true);
  const auto traced_off = offsets(false);

  const auto dk = static_cast<Eigen::Index>(kept_off.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      cplx acc = 0.0;
      for (auto t : traced_off) {
        acc += op(static_cast<Eigen::Index>(kept_off[r] + t),
                  static_cast<Eigen::Index>(kept_off[c] + t));
      }
      out(r, c) = acc;
    }
  }
  return out;
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(a - a.adjoint());
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix hermitian_part(const ComplexMatrix& x) {
  return (x + x.adjoint()) / 2.0;
}

// ---- spectra -------------------------------------------------------------

HermitianEigen hermitian_eig(const ComplexMatrix& h) {
  require_square(h, "hermitian_eig");
  const double defect = hermiticity_defect(h);
  if (defect > tol::kHermitianInput) {
    std::ostringstream os;
    os << "hermitian_eig: input is not Hermitian (defect " << defect << ")";
    throw ArgumentError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(h));
  if (es.info() != Eigen::Success) throw NumericalError("hermitian_eig: solver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

GeneralEigen general_eig(const ComplexMatrix& a, bool want_vectors) {
  require_square(a, "general_eig");
  const auto n = static_cast<lapack_int>(a.rows());
  // zgeev wants column-major storage, which is Eigen's default.
  ComplexMatrix work = a;
  ComplexVector w(n);
  ComplexMatrix vr;
  if (want_vectors) vr.resize(n, n);
  lapack_complex_double dummy{};
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n,
      reinterpret_cast<lapack_complex_double*>(w.data()), &dummy, 1,
      want_vectors ? reinterpret_cast<lapack_complex_double*>(vr.data()) : &dummy,
      want_vectors ? n : 1);
  if (info != 0) {
    std::ostringstream os;
    os << "general_eig: zgeev failed with info " << info;
    throw NumericalError(os.str());
  }
  return {std::move(w), std::move(vr)};
}

ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double t) {
  const auto eig = hermitian_eig(h);
  ComplexVector phases(eig.values.size());
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    phases(k) = std::exp(cplx(0.0, -eig.values(k) * t));
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

RealVector singular_values(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

// ---- functionals ---------------------------------------------------------

double trace_norm(const ComplexMatrix& a) {
  require_square(a, "trace_norm");
  return singular_values(a).sum();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw ShapeError("trace_distance: dimension mismatch");
  // Difference of Hermitian matrices: singular values are |eigenvalues|.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(
      hermitian_part(rho.matrix() - sigma.matrix()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(rho.matrix()),
                                                  Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    double lam = es.eigenvalues()(k);
    if (lam < -tol::kEntropyClip || lam > 1.0 + tol::kEntropyClip) {
      std::ostringstream os;
      os << "von_neumann_entropy: eigenvalue " << lam << " outside [0,1] beyond clip";
      throw ArgumentError(os.str());
    }
    lam = std::clamp(lam, 0.0, 1.0);
    if (lam > 0.0) s -= lam * std::log2(lam);
  }
  return std::max(s, 0.0);
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    std::ostringstream os;
    os << "concurrence: expected a two-qubit state (dim 4), got dim " << rho.dim();
    throw ShapeError(os.str());
  }
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const ComplexMatrix tilde = yy * rho.matrix().conjugate() * yy;
  // Eigenvalues of rho*tilde equal those of sqrt(rho) tilde sqrt(rho), which is
  // Hermitian PSD and numerically better behaved.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(rho.matrix()));
  RealVector lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix sqrt_rho = es.eigenvectors() * lam.asDiagonal() *
                                 es.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es2(
      hermitian_part(sqrt_rho * tilde * sqrt_rho), Eigen::EigenvaluesOnly);
  std::vector<double> mu(4);
  for (int k = 0; k < 4; ++k) mu[k] = std::sqrt(std::max(0.0, es2.eigenvalues()(k)));
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return std::clamp(mu[0] - mu[1] - mu[2] - mu[3], 0.0, 1.0);
}

}  // namespace mediahom
