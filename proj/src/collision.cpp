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

#include "mediahom/collision.hpp"

#include <cmath>
#include <sstream>

#include "mediahom/errors.hpp"

namespace mediahom {

// ---- Superoperator -------------------------------------------------------

Superoperator::Superoperator(std::size_t dim, ComplexMatrix matrix)
    : dim_(dim), m_(std::move(matrix)) {
  const auto n = static_cast<Eigen::Index>(dim * dim);
  if (dim == 0 || m_.rows() != n || m_.cols() != n) {
    throw ShapeError("Superoperator: matrix must be D^2 x D^2");
  }
}

Superoperator Superoperator::identity(std::size_t dim) {
  return Superoperator(dim, mediahom::identity(dim * dim));
}

Superoperator Superoperator::from_kraus(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw ArgumentError("Superoperator::from_kraus: empty Kraus list");
  const auto d = kraus.front().rows();
  ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d) {
      throw ShapeError("Superoperator::from_kraus: Kraus operators differ in shape");
    }
    m += kron(k, k.conjugate());
  }
  return Superoperator(static_cast<std::size_t>(d), std::move(m));
}

Superoperator Superoperator::unitary_conjugation(const ComplexMatrix& v) {
  return from_kraus({v});
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& x) const {
  if (static_cast<std::size_t>(x.rows()) != dim_ || x.rows() != x.cols()) {
    throw ShapeError("Superoperator::apply: input dimension mismatch");
  }
  return unvectorize(m_ * vectorize(x), dim_);
}

ComplexVector vectorize(const ComplexMatrix& x) {
  const auto d = x.rows();
  ComplexVector v(x.rows() * x.cols());
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) v(i * x.cols() + j) = x(i, j);
  return v;
}

ComplexMatrix unvectorize(const ComplexVector& v, std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  if (v.size() != d * d) throw ShapeError("unvectorize: length is not dim^2");
  ComplexMatrix x(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) x(i, j) = v(i * d + j);
  return x;
}

Superoperator mix(double p, const Superoperator& a, const Superoperator& b) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("mix: weight must lie in [0, 1]");
  if (a.dim() != b.dim()) throw ShapeError("mix: superoperator dimensions differ");
  return Superoperator(a.dim(), p * a.matrix() + (1.0 - p) * b.matrix());
}

Superoperator compose(const Superoperator& outer, const Superoperator& inner) {
  if (outer.dim() != inner.dim()) throw ShapeError("compose: superoperator dimensions differ");
  return Superoperator(outer.dim(), outer.matrix() * inner.matrix());
}

// ---- CollisionChannel ----------------------------------------------------

namespace {

std::vector<ComplexMatrix> dilation_kraus(std::size_t system_dim, std::size_t ancilla_dim,
                                          const ComplexMatrix& u,
                                          const DensityMatrix& omega) {
  const auto ds = static_cast<Eigen::Index>(system_dim);
  const auto da = static_cast<Eigen::Index>(ancilla_dim);
  const auto eig = hermitian_eig(omega.matrix());
  std::vector<ComplexMatrix> out;
  for (Eigen::Index k = 0; k < da; ++k) {
    const double mu = eig.values(k);
    if (mu <= tol::kKrausWeight) continue;
    const ComplexVector chi = eig.vectors.col(k);
    const double w = std::sqrt(mu);
    for (Eigen::Index j = 0; j < da; ++j) {
      ComplexMatrix kj(ds, ds);
      for (Eigen::Index s = 0; s < ds; ++s) {
        for (Eigen::Index s2 = 0; s2 < ds; ++s2) {
          kj(s, s2) = w * (u.block(s * da + j, s2 * da, 1, da) * chi)(0, 0);
        }
      }
      out.push_back(std::move(kj));
    }
  }
  return out;
}

}  // namespace

CollisionChannel::CollisionChannel(std::size_t system_dim, SubsystemShape ancilla_shape,
                                   ComplexMatrix joint_unitary, DensityMatrix ancilla_state,
                                   double interaction_time)
    : system_dim_(system_dim),
      ancilla_shape_(std::move(ancilla_shape)),
      unitary_(std::move(joint_unitary)),
      ancilla_(std::move(ancilla_state)),
      time_(interaction_time) {
  if (system_dim_ < 2) throw ArgumentError("CollisionChannel: system dimension must be >= 2");
  ancilla_shape_.require_total(ancilla_.dim(), "CollisionChannel ancilla state");
  const auto n = static_cast<Eigen::Index>(system_dim_ * ancilla_shape_.total());
  if (unitary_.rows() != n || unitary_.cols() != n) {
    throw ShapeError("CollisionChannel: joint unitary dimension mismatch");
  }
  const double defect = max_abs(unitary_.adjoint() * unitary_ - ComplexMatrix::Identity(n, n));
  if (defect > tol::kUnitarity) {
    std::ostringstream os;
    os << "CollisionChannel: joint operator is not unitary (defect " << defect << ")";
    throw NumericalError(os.str());
  }
  kraus_ = dilation_kraus(system_dim_, ancilla_shape_.total(), unitary_, ancilla_);
  const auto ds = static_cast<Eigen::Index>(system_dim_);
  ComplexMatrix completeness = ComplexMatrix::Zero(ds, ds);
  for (const auto& k : kraus_) completeness += k.adjoint() * k;
  const double kdef = max_abs(completeness - ComplexMatrix::Identity(ds, ds));
  if (kdef > tol::kUnitarity) {
    std::ostringstream os;
    os << "CollisionChannel: Kraus completeness defect " << kdef;
    throw NumericalError(os.str());
  }
}

ComplexMatrix CollisionChannel::joint_output(const DensityMatrix& rho) const {
  if (rho.dim() != system_dim_) {
    std::ostringstream os;
    os << "CollisionChannel: input dimension " << rho.dim() << " != system dimension "
       << system_dim_;
    throw ShapeError(os.str());
  }
  return unitary_ * kron(rho.matrix(), ancilla_.matrix()) * unitary_.adjoint();
}

DensityMatrix CollisionChannel::apply(const DensityMatrix& rho) const {
  const ComplexMatrix joint = joint_output(rho);
  const auto ds = static_cast<Eigen::Index>(system_dim_);
  const auto da = static_cast<Eigen::Index>(ancilla_shape_.total());
  // Trace over the trailing ancilla block.
  ComplexMatrix out(ds, ds);
  for (Eigen::Index s = 0; s < ds; ++s)
    for (Eigen::Index s2 = 0; s2 < ds; ++s2)
      out(s, s2) = joint.block(s * da, s2 * da, da, da).trace();
  return DensityMatrix(hermitian_part(out), tol::kOutput);
}

CollisionChannel build_channel(const ComplexMatrix& system_h,
                               const ComplexMatrix& interaction_h,
                               const SubsystemShape& ancilla_shape,
                               const DensityMatrix& ancilla_state, double t) {
  if (!(t >= 0.0)) throw ArgumentError("build_channel: interaction time must be >= 0");
  if (system_h.rows() != system_h.cols()) {
    throw ShapeError("build_channel: system Hamiltonian is not square");
  }
  const auto ds = static_cast<std::size_t>(system_h.rows());
  ancilla_shape.require_total(ancilla_state.dim(), "build_channel ancilla state");
  const auto n = static_cast<Eigen::Index>(ds * ancilla_shape.total());
  if (interaction_h.rows() != n || interaction_h.cols() != n) {
    std::ostringstream os;
    os << "build_channel: interaction Hamiltonian is " << interaction_h.rows() << "x"
       << interaction_h.cols() << ", expected " << n << "x" << n;
    throw ShapeError(os.str());
  }
  const ComplexMatrix total = kron(system_h, identity(ancilla_shape.total())) + interaction_h;
  return CollisionChannel(ds, ancilla_shape, unitary_from_hamiltonian(total, t),
                          ancilla_state, t);
}

CollisionChannel build_channel(const ComplexMatrix& system_h,
                               const ComplexMatrix& interaction_h,
                               const DensityMatrix& ancilla_state, double t) {
  return build_channel(system_h, interaction_h, SubsystemShape({ancilla_state.dim()}),
                       ancilla_state, t);
}

CollisionChannel build_two_bath_channel(const ComplexMatrix& system_h,
                                        const ComplexMatrix& interaction_h_b,
                                        const ComplexMatrix& interaction_h_c,
                                        const DensityMatrix& omega_b,
                                        const DensityMatrix& nu_c, double t) {
  if (interaction_h_b.rows() != interaction_h_c.rows() ||
      interaction_h_b.cols() != interaction_h_c.cols()) {
    throw ShapeError("build_two_bath_channel: bath interaction Hamiltonians differ in shape");
  }
  const DensityMatrix joint(kron(omega_b.matrix(), nu_c.matrix()));
  return build_channel(system_h, interaction_h_b + interaction_h_c,
                       SubsystemShape({omega_b.dim(), nu_c.dim()}), joint, t);
}

GroundSplit split_ground_component(const DensityMatrix& state) {
  GroundSplit out;
  out.weight = state(0, 0).real();
  const auto n = static_cast<Eigen::Index>(state.dim());
  ComplexMatrix rest = state.matrix();
  rest(0, 0) -= out.weight;
  if (1.0 - out.weight > tol::kStructural) {
    rest /= (1.0 - out.weight);
    out.remainder = rest;
    out.remainder_is_state = validate_density(rest, tol::kStructural).passed;
  } else {
    out.remainder = ComplexMatrix::Zero(n, n);
  }
  return out;
}

// ---- operations ----------------------------------------------------------

DensityMatrix apply(const CollisionChannel& ch, const DensityMatrix& rho) {
  return ch.apply(rho);
}

std::vector<DensityMatrix> iterate(const CollisionChannel& ch, const DensityMatrix& rho0,
                                   std::size_t n) {
  std::vector<DensityMatrix> traj;
  traj.reserve(n + 1);
  traj.push_back(rho0);
  for (std::size_t k = 0; k < n; ++k) traj.push_back(ch.apply(traj.back()));
  return traj;
}

std::vector<ComplexMatrix> kraus_operators(const CollisionChannel& ch) { return ch.kraus(); }

Superoperator superoperator_matrix(const CollisionChannel& ch) {
  if (ch.system_dim() > tol::kMaxSuperoperatorDim) {
    std::ostringstream os;
    os << "superoperator_matrix: system dimension " << ch.system_dim()
       << " exceeds the dense superoperator limit of " << tol::kMaxSuperoperatorDim;
    throw CapacityError(os.str());
  }
  return Superoperator::from_kraus(ch.kraus());
}

std::vector<DensityMatrix> apply_sequence(const std::vector<CollisionChannel>& seq,
                                          const DensityMatrix& rho0) {
  for (const auto& ch : seq) {
    if (ch.system_dim() != rho0.dim()) {
      throw ShapeError("apply_sequence: channel system dimension differs from the input");
    }
  }
  std::vector<DensityMatrix> traj;
  traj.reserve(seq.size() + 1);
  traj.push_back(rho0);
  for (const auto& ch : seq) traj.push_back(ch.apply(traj.back()));
  return traj;
}

void ControllerSequence::validate() const {
  if (!(p_min > 0.0 && p_min <= 1.0)) {
    throw ArgumentError("ControllerSequence: p_min must lie in (0,1]");
  }
  for (std::size_t l = 0; l < steps.size(); ++l) {
    const double p = steps[l].p;
    std::ostringstream os;
    if (!(p > 0.0 && p <= 1.0)) {
      os << "ControllerSequence: step " << l << " has p = " << p << " outside (0,1]";
      throw ArgumentError(os.str());
    }
    if (p < p_min) {
      os << "ControllerSequence: step " << l << " has p = " << p << " below p_min = "
         << p_min;
      throw ArgumentError(os.str());
    }
    if (steps[l].perturbation.dim() != base_state.dim()) {
      os << "ControllerSequence: step " << l << " perturbation dimension mismatch";
      throw ShapeError(os.str());
    }
  }
}

std::vector<CollisionChannel> imperfect_controller_sequence(
    const ComplexMatrix& system_h, const ComplexMatrix& interaction_h, double t,
    const ControllerSequence& seq) {
  seq.validate();
  // One shared unitary; only the ancilla state changes between steps.
  const auto ds = static_cast<std::size_t>(system_h.rows());
  const SubsystemShape ancilla({seq.base_state.dim()});
  const auto base = build_channel(system_h, interaction_h, ancilla, seq.base_state, t);
  std::vector<CollisionChannel> out;
  out.reserve(seq.steps.size());
  for (const auto& step : seq.steps) {
    DensityMatrix omega(hermitian_part(step.p * seq.base_state.matrix() +
                                       (1.0 - step.p) * step.perturbation.matrix()));
    out.emplace_back(ds, ancilla, base.joint_unitary(), std::move(omega), t);
  }
  return out;
}

}  // namespace mediahom
