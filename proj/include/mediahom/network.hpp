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

// Hamiltonians of qudit networks and their bath couplings.
//
// Coupling sums run over unordered pairs: each edge of a CouplingGraph
// contributes exactly one term.
//
//   swap network:  H = sum_e J_e S_{a b}
//   XXZ (qubits):  H = sum_e (J_e / 2) (X_a X_b + Y_a Y_b + delta Z_a Z_b)
//
// For qubits S = (I + XX + YY + ZZ) / 2, so at delta = 1 the two differ by
// the constant (J_e / 2) I per edge. Only the global phase of a collision
// unitary depends on it.

#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mediahom/qmath.hpp"

namespace mediahom {

struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  double coupling = 0.0;
};

/// Weighted graph over network sites; at most one edge per unordered pair.
class CouplingGraph {
 public:
  explicit CouplingGraph(std::size_t n_sites);
  CouplingGraph(std::size_t n_sites, const std::vector<Edge>& edges);

  /// Throws ArgumentError for self loops, out-of-range sites and duplicate pairs.
  void add_edge(std::size_t a, std::size_t b, double coupling);

  std::size_t sites() const noexcept { return n_sites_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

 private:
  std::size_t n_sites_;
  std::vector<Edge> edges_;
};

/// Nearest-neighbour open chain: edges (k, k+1, J) for k = 0..n-2.
CouplingGraph chain_graph(std::size_t n, double coupling);

struct SwapModel {};
struct XxzModel {
  double delta = 1.0;
};
using NetworkModel = std::variant<SwapModel, XxzModel>;

struct BathAttachment {
  std::string label;
  std::size_t site = 0;
};

struct NetworkSpec {
  CouplingGraph graph{1};
  std::size_t local_dim = 2;
  NetworkModel model = SwapModel{};
  std::vector<BathAttachment> baths;

  /// Throws ModelError / ArgumentError when the invariants do not hold.
  void validate() const;

  /// [d, d, ..., d] over the network sites.
  SubsystemShape system_shape() const;
  /// Network sites followed by one factor per bath, in attachment order.
  SubsystemShape joint_shape() const;
};

/// Operator permuting tensor factors: factor k of the input lands in slot
/// perm[k] of the output. Requires equal local dimensions along each cycle.
ComplexMatrix permutation_operator(const SubsystemShape& shape,
                                   const std::vector<std::size_t>& perm);

/// Exchanges factors i and j.
ComplexMatrix swap_operator(const SubsystemShape& shape, std::size_t i, std::size_t j);

/// op acting on the listed factors (in the order given), identity elsewhere.
ComplexMatrix embed(const SubsystemShape& shape, const ComplexMatrix& op,
                    const std::vector<std::size_t>& factors);

ComplexMatrix swap_network_hamiltonian(const NetworkSpec& spec);
ComplexMatrix xxz_hamiltonian(const NetworkSpec& spec);
/// Dispatches on spec.model.
ComplexMatrix system_hamiltonian(const NetworkSpec& spec);

/// Sum of swaps S_{ancilla factor, system site} on the joint shape.
/// Empty pair list yields the zero matrix.
ComplexMatrix interaction_hamiltonian(
    const SubsystemShape& joint,
    const std::vector<std::pair<std::size_t, std::size_t>>& ancilla_site_pairs);

/// Interaction Hamiltonian of a single bath of `spec` on spec.joint_shape().
ComplexMatrix bath_interaction(const NetworkSpec& spec, std::size_t bath_index);

/// M = -sum over every factor of |phi><phi| on that factor. `shape` covers the
/// N system sites followed by the ancilla.
ComplexMatrix excitation_observable(const ComplexVector& phi, const SubsystemShape& shape);

}  // namespace mediahom
