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

// Collision channels E(rho) = Tr_anc[ U (rho (x) omega) U^dag ] with
// U = exp[-i (H_A (x) I + H_I) t]. The system is the leading tensor factor of
// the joint space and the ancilla factors follow.
//
// Superoperators use row-major vectorization: vec(rho)[i * D + j] = rho(i, j).
// In this convention rho -> K rho K^dag has matrix kron(K, conj(K)).

#pragma once

#include <vector>

#include "mediahom/qmath.hpp"

namespace mediahom {

/// Linear map on D x D matrices as a D^2 x D^2 matrix.
class Superoperator {
 public:
  Superoperator(std::size_t dim, ComplexMatrix matrix);

  static Superoperator identity(std::size_t dim);
  static Superoperator from_kraus(const std::vector<ComplexMatrix>& kraus);
  /// rho -> V rho V^dag
  static Superoperator unitary_conjugation(const ComplexMatrix& v);

  std::size_t dim() const noexcept { return dim_; }
  const ComplexMatrix& matrix() const noexcept { return m_; }

  ComplexMatrix apply(const ComplexMatrix& x) const;

 private:
  std::size_t dim_;
  ComplexMatrix m_;
};

ComplexVector vectorize(const ComplexMatrix& x);
ComplexMatrix unvectorize(const ComplexVector& v, std::size_t dim);

/// p * a + (1 - p) * b.
Superoperator mix(double p, const Superoperator& a, const Superoperator& b);
/// outer o inner (inner applied first).
Superoperator compose(const Superoperator& outer, const Superoperator& inner);

class CollisionChannel {
 public:
  /// Wraps an already computed joint unitary. Validates unitarity and Kraus
  /// completeness.
  CollisionChannel(std::size_t system_dim, SubsystemShape ancilla_shape,
                   ComplexMatrix joint_unitary, DensityMatrix ancilla_state,
                   double interaction_time);

  std::size_t system_dim() const noexcept { return system_dim_; }
  const SubsystemShape& ancilla_shape() const noexcept { return ancilla_shape_; }
  const ComplexMatrix& joint_unitary() const noexcept { return unitary_; }
  const DensityMatrix& ancilla_state() const noexcept { return ancilla_; }
  double interaction_time() const noexcept { return time_; }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }

  /// Tr_anc[U (rho (x) omega) U^dag], computed on the joint space.
  DensityMatrix apply(const DensityMatrix& rho) const;

  /// U (rho (x) omega) U^dag before the ancilla is traced out.
  ComplexMatrix joint_output(const DensityMatrix& rho) const;

 private:
  std::size_t system_dim_;
  SubsystemShape ancilla_shape_;
  ComplexMatrix unitary_;
  DensityMatrix ancilla_;
  double time_;
  std::vector<ComplexMatrix> kraus_;
};

/// H_A acts on the system only; H_I acts on system (x) ancilla. t = 0 is
/// accepted and yields the identity channel; t < 0 is rejected.
CollisionChannel build_channel(const ComplexMatrix& system_h,
                               const ComplexMatrix& interaction_h,
                               const SubsystemShape& ancilla_shape,
                               const DensityMatrix& ancilla_state, double t);

/// Single ancilla factor of dimension ancilla_state.dim().
CollisionChannel build_channel(const ComplexMatrix& system_h,
                               const ComplexMatrix& interaction_h,
                               const DensityMatrix& ancilla_state, double t);

/// Two baths B and C colliding simultaneously, treated as one composite
/// ancilla B (x) C in state omega_B (x) nu_C.
CollisionChannel build_two_bath_channel(const ComplexMatrix& system_h,
                                        const ComplexMatrix& interaction_h_b,
                                        const ComplexMatrix& interaction_h_c,
                                        const DensityMatrix& omega_b,
                                        const DensityMatrix& nu_c, double t);

struct GroundSplit {
  double weight = 0.0;            // <0...0| state |0...0>
  ComplexMatrix remainder;        // (state - weight |0..0><0..0|) / (1 - weight)
  bool remainder_is_state = false;
};

/// Writes a state as weight |0..0><0..0| + (1 - weight) remainder.
GroundSplit split_ground_component(const DensityMatrix& state);

DensityMatrix apply(const CollisionChannel& ch, const DensityMatrix& rho);

/// [rho0, E(rho0), ..., E^n(rho0)]
std::vector<DensityMatrix> iterate(const CollisionChannel& ch, const DensityMatrix& rho0,
                                   std::size_t n);

/// K_{jk} = sqrt(mu_k) (I (x) <j|) U (I (x) |chi_k>) for omega = sum mu_k |chi_k><chi_k|.
std::vector<ComplexMatrix> kraus_operators(const CollisionChannel& ch);

/// Throws CapacityError when system_dim exceeds tol::kMaxSuperoperatorDim.
Superoperator superoperator_matrix(const CollisionChannel& ch);

/// [rho0, E_1(rho0), E_2(E_1(rho0)), ...]
std::vector<DensityMatrix> apply_sequence(const std::vector<CollisionChannel>& seq,
                                          const DensityMatrix& rho0);

struct ControllerStep {
  double p = 1.0;
  DensityMatrix perturbation;
};

/// Controllers prepared in p_l * base + (1 - p_l) * perturbation_l with p_l >= p_min.
struct ControllerSequence {
  DensityMatrix base_state;
  double p_min = 1.0;
  std::vector<ControllerStep> steps;

  void validate() const;
};

std::vector<CollisionChannel> imperfect_controller_sequence(
    const ComplexMatrix& system_h, const ComplexMatrix& interaction_h, double t,
    const ControllerSequence& seq);

}  // namespace mediahom
