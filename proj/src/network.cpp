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

#include "mediahom/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "mediahom/errors.hpp"

namespace mediahom {

namespace {

std::vector<std::size_t> digits_of(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t f = dims.size(); f-- > 0;) {
    d[f] = index % dims[f];
    index /= dims[f];
  }
  return d;
}

std::size_t index_of(const std::vector<std::size_t>& digits,
                     const std::vector<std::size_t>& dims) {
  std::size_t idx = 0;
  for (std::size_t f = 0; f < dims.size(); ++f) idx = idx * dims[f] + digits[f];
  return idx;
}

}  // namespace

// ---- graphs --------------------------------------------------------------

CouplingGraph::CouplingGraph(std::size_t n_sites) : n_sites_(n_sites) {
  if (n_sites == 0) throw ArgumentError("CouplingGraph: n_sites must be positive");
}

CouplingGraph::CouplingGraph(std::size_t n_sites, const std::vector<Edge>& edges)
    : CouplingGraph(n_sites) {
  for (const auto& e : edges) add_edge(e.a, e.b, e.coupling);
}

void CouplingGraph::add_edge(std::size_t a, std::size_t b, double coupling) {
  std::ostringstream os;
  if (a >= n_sites_ || b >= n_sites_) {
    os << "CouplingGraph: edge (" << a << "," << b << ") references a site outside [0,"
       << n_sites_ << ")";
    throw ArgumentError(os.str());
  }
  if (a == b) {
    os << "CouplingGraph: self loop at site " << a;
    throw ArgumentError(os.str());
  }
  for (const auto& e : edges_) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) {
      os << "CouplingGraph: duplicate edge (" << a << "," << b << ")";
      throw ArgumentError(os.str());
    }
  }
  edges_.push_back({a, b, coupling});
}

CouplingGraph chain_graph(std::size_t n, double coupling) {
  if (n == 0) throw ArgumentError("chain_graph: N must be at least 1");
  CouplingGraph g(n);
  for (std::size_t k = 0; k + 1 < n; ++k) g.add_edge(k, k + 1, coupling);
  return g;
}

void NetworkSpec::validate() const {
  if (local_dim < 2) throw ArgumentError("NetworkSpec: local_dim must be >= 2");
  if (std::holds_alternative<XxzModel>(model) && local_dim != 2) {
    throw ModelError("NetworkSpec: the XXZ model requires local_dim = 2");
  }
  std::set<std::size_t> used;
  for (const auto& b : baths) {
    if (b.site >= graph.sites()) {
      std::ostringstream os;
      os << "NetworkSpec: bath '" << b.label << "' attached to invalid site " << b.site;
      throw ArgumentError(os.str());
    }
    if (!used.insert(b.site).second) {
      std::ostringstream os;
      os << "NetworkSpec: more than one bath attached to site " << b.site;
      throw ArgumentError(os.str());
    }
  }
}

SubsystemShape NetworkSpec::system_shape() const {
  return SubsystemShape(std::vector<std::size_t>(graph.sites(), local_dim));
}

SubsystemShape NetworkSpec::joint_shape() const {
  return SubsystemShape(std::vector<std::size_t>(graph.sites() + baths.size(), local_dim));
}

// ---- embedding -----------------------------------------------------------

ComplexMatrix permutation_operator(const SubsystemShape& shape,
                                   const std::vector<std::size_t>& perm) {
  const auto& dims = shape.dims();
  if (perm.size() != dims.size()) {
    throw ArgumentError("permutation_operator: permutation length differs from factor count");
  }
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= dims.size() || seen[perm[k]]) {
      throw ArgumentError("permutation_operator: not a permutation");
    }
    seen[perm[k]] = true;
    if (dims[perm[k]] != dims[k]) {
      std::ostringstream os;
      os << "permutation_operator: factors " << k << " and " << perm[k]
         << " have different local dimensions";
      throw ArgumentError(os.str());
    }
  }
  const auto n = static_cast<Eigen::Index>(shape.total());
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  std::vector<std::size_t> out(dims.size());
  for (std::size_t in = 0; in < shape.total(); ++in) {
    const auto d = digits_of(in, dims);
    for (std::size_t k = 0; k < d.size(); ++k) out[perm[k]] = d[k];
    p(static_cast<Eigen::Index>(index_of(out, dims)), static_cast<Eigen::Index>(in)) = 1.0;
  }
  return p;
}

ComplexMatrix swap_operator(const SubsystemShape& shape, std::size_t i, std::size_t j) {
  if (i >= shape.factors() || j >= shape.factors()) {
    throw ArgumentError("swap_operator: factor index out of range");
  }
  if (i == j) throw ArgumentError("swap_operator: i and j must differ");
  if (shape.dim(i) != shape.dim(j)) {
    throw ArgumentError("swap_operator: swapped factors have unequal local dimensions");
  }
  std::vector<std::size_t> perm(shape.factors());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::swap(perm[i], perm[j]);
  return permutation_operator(shape, perm);
}

ComplexMatrix embed(const SubsystemShape& shape, const ComplexMatrix& op,
                    const std::vector<std::size_t>& factors) {
  const auto& dims = shape.dims();
  std::vector<std::size_t> sub_dims;
  std::vector<bool> acted(dims.size(), false);
  for (auto f : factors) {
    if (f >= dims.size() || acted[f]) {
      throw ArgumentError("embed: factor list has an invalid or repeated entry");
    }
    acted[f] = true;
    sub_dims.push_back(dims[f]);
  }
  std::size_t sub_total = 1;
  for (auto d : sub_dims) sub_total *= d;
  if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != sub_total) {
    throw ShapeError("embed: operator dimension does not match the listed factors");
  }

  const auto n = static_cast<Eigen::Index>(shape.total());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  std::vector<std::size_t> sub_r(factors.size()), sub_c(factors.size());
  for (std::size_t r = 0; r < shape.total(); ++r) {
    const auto dr = digits_of(r, dims);
    for (std::size_t k = 0; k < factors.size(); ++k) sub_r[k] = dr[factors[k]];
    const auto ir = index_of(sub_r, sub_dims);
    // Columns agree with r on every spectator factor.
    auto dc = dr;
    for (std::size_t ic = 0; ic < sub_total; ++ic) {
      std::size_t rem = ic;
      for (std::size_t k = factors.size(); k-- > 0;) {
        dc[factors[k]] = rem % sub_dims[k];
        rem /= sub_dims[k];
      }
      const cplx v = op(static_cast<Eigen::Index>(ir), static_cast<Eigen::Index>(ic));
      if (v != cplx(0.0, 0.0)) {
        out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(index_of(dc, dims))) = v;
      }
    }
  }
  return out;
}

// ---- Hamiltonians --------------------------------------------------------

ComplexMatrix swap_network_hamiltonian(const NetworkSpec& spec) {
  spec.validate();
  if (!std::holds_alternative<SwapModel>(spec.model)) {
    throw ModelError("swap_network_hamiltonian: spec model is not a swap network");
  }
  const auto shape = spec.system_shape();
  const auto n = static_cast<Eigen::Index>(shape.total());
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (const auto& e : spec.graph.edges()) h += e.coupling * swap_operator(shape, e.a, e.b);
  return h;
}

ComplexMatrix xxz_hamiltonian(const NetworkSpec& spec) {
  if (spec.local_dim != 2) throw ModelError("xxz_hamiltonian: requires local_dim = 2");
  spec.validate();
  const auto* xxz = std::get_if<XxzModel>(&spec.model);
  if (xxz == nullptr) throw ModelError("xxz_hamiltonian: spec model is not XXZ");
  const auto shape = spec.system_shape();
  const ComplexMatrix bond = kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y()) +
                             xxz->delta * kron(pauli_z(), pauli_z());
  const auto n = static_cast<Eigen::Index>(shape.total());
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (const auto& e : spec.graph.edges()) {
    h += (e.coupling / 2.0) * embed(shape, bond, {e.a, e.b});
  }
  return h;
}

ComplexMatrix system_hamiltonian(const NetworkSpec& spec) {
  if (std::holds_alternative<SwapModel>(spec.model)) return swap_network_hamiltonian(spec);
  return xxz_hamiltonian(spec);
}

ComplexMatrix interaction_hamiltonian(
    const SubsystemShape& joint,
    const std::vector<std::pair<std::size_t, std::size_t>>& ancilla_site_pairs) {
  const auto n = static_cast<Eigen::Index>(joint.total());
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (const auto& [ancilla, site] : ancilla_site_pairs) {
    if (ancilla >= joint.factors() || site >= joint.factors()) {
      throw ArgumentError("interaction_hamiltonian: factor index out of range");
    }
    if (joint.dim(ancilla) != joint.dim(site)) {
      std::ostringstream os;
      os << "interaction_hamiltonian: ancilla factor " << ancilla << " (dim "
         << joint.dim(ancilla) << ") and site " << site << " (dim " << joint.dim(site)
         << ") differ in dimension";
      throw ArgumentError(os.str());
    }
    h += swap_operator(joint, ancilla, site);
  }
  return h;
}

ComplexMatrix bath_interaction(const NetworkSpec& spec, std::size_t bath_index) {
  spec.validate();
  if (bath_index >= spec.baths.size()) {
    throw ArgumentError("bath_interaction: bath index out of range");
  }
  return interaction_hamiltonian(
      spec.joint_shape(),
      {{spec.graph.sites() + bath_index, spec.baths[bath_index].site}});
}

ComplexMatrix excitation_observable(const ComplexVector& phi, const SubsystemShape& shape) {
  if (std::abs(phi.norm() - 1.0) > tol::kStructural) {
    throw ArgumentError("excitation_observable: phi is not normalized");
  }
  const ComplexMatrix proj = phi * phi.adjoint();
  const auto n = static_cast<Eigen::Index>(shape.total());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (std::size_t f = 0; f < shape.factors(); ++f) {
    if (shape.dim(f) != static_cast<std::size_t>(phi.size())) {
      throw ArgumentError("excitation_observable: phi dimension differs from a local dimension");
    }
    m -= embed(shape, proj, {f});
  }
  return m;
}

}  // namespace mediahom
