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

#include <cstdint>
#include <random>

#include "mediahom/qmath.hpp"

// Seeded random operators. Reproducible for a fixed seed on a given platform.
namespace mediahom::random {

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);
ComplexMatrix hermitian(std::size_t dim, Rng& rng);
/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix unitary(std::size_t dim, Rng& rng);
ComplexVector pure_state(std::size_t dim, Rng& rng);
/// Full-rank mixed state G G^dag / Tr(G G^dag).
DensityMatrix mixed_state(std::size_t dim, Rng& rng);
/// Qubit state diagonal in the computational basis with p uniform in [lo, hi].
DensityMatrix diagonal_qubit(Rng& rng, double lo = 0.05, double hi = 0.95);

}  // namespace mediahom::random
