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

#pragma once

#include <cstddef>

// All numerical thresholds used by the library live here.
namespace mediahom::tol {

/// Structural validation of density matrices (Hermiticity, trace, positivity).
inline constexpr double kStructural = 1e-10;

/// Validation applied to channel outputs and computed fixed points.
inline constexpr double kOutput = 1e-8;

/// Hermiticity required of inputs to eigensolvers and exponentials.
inline constexpr double kHermitianInput = 1e-10;

/// Largest negative / above-one eigenvalue that entropy silently clips.
inline constexpr double kEntropyClip = 1e-9;

/// Unitarity of generated unitaries and Kraus completeness.
inline constexpr double kUnitarity = 1e-9;

/// Eigenvalues within this distance of the unit circle count as peripheral.
inline constexpr double kPeripheral = 1e-8;

/// Eigenvalues of a superoperator within this distance of 1 form the fixed space.
inline constexpr double kDegeneracy = 1e-8;

/// Required ||E(rho*) - rho*||_1 of a spectral fixed point.
inline constexpr double kFixedPointResidual = 1e-8;

/// Eigenvalue grouping and overlap cutoff for the factorized-eigenvector count.
inline constexpr double kEigenspaceGrouping = 1e-8;
inline constexpr double kFactorization = 1e-8;

/// Entropy below which a bath state counts as pure.
inline constexpr double kEntropyFloor = 1e-12;

/// Non-increase slack of forgetting-metric series.
inline constexpr double kMonotoneSlack = 1e-10;

/// Kraus branches with ancilla weight below this are dropped.
inline constexpr double kKrausWeight = 1e-14;

/// Largest system dimension for which a dense superoperator is built.
inline constexpr std::size_t kMaxSuperoperatorDim = 64;

}  // namespace mediahom::tol
