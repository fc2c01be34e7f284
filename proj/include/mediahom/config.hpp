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

// Scenario configuration. The JSON schema is documented in docs/config.md;
// every rejection names the offending field.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mediahom/network.hpp"
#include "mediahom/qmath.hpp"

namespace mediahom {

enum class ModelKind { kSwap, kXxz };
enum class TwoBathMode { kSimultaneous, kAlternating };
enum class BathColumns { kInput, kPostCollision };
enum class Solver { kAuto, kSpectral, kIterative, kBoth };

struct BathConfig {
  std::size_t site = 0;
  DensityMatrix state;
  std::string label;
};

struct GroundInitial {};
struct RandomInitial {
  std::uint64_t seed = 0;
};
struct ExplicitInitial {
  DensityMatrix state;
};
using InitialState = std::variant<GroundInitial, RandomInitial, ExplicitInitial>;

struct FixedPointAnalysis {};
struct TrajectoryAnalysis {
  std::size_t steps = 0;
};
struct SpectrumAnalysis {};
/// Per-site |0> populations of the steady state, baths included.
struct ProfileAnalysis {};
using Analysis =
    std::variant<FixedPointAnalysis, TrajectoryAnalysis, SpectrumAnalysis, ProfileAnalysis>;

struct Tolerances {
  double iteration = 1e-10;
  std::size_t max_iter = 200000;
  double peripheral = tol::kPeripheral;
};

struct SweepConfig {
  std::string param;  // JSON pointer into the config
  std::string label;
  std::vector<nlohmann::json> values;
};

struct ScenarioConfig {
  ModelKind model = ModelKind::kSwap;
  std::size_t n_sites = 1;
  std::size_t local_dim = 2;
  double delta = 1.0;
  std::vector<Edge> edges;
  double t = 0.5;
  std::vector<BathConfig> baths;
  InitialState initial = GroundInitial{};
  Analysis analysis = FixedPointAnalysis{};
  Tolerances tolerances;
  TwoBathMode two_bath_mode = TwoBathMode::kSimultaneous;
  BathColumns bath_columns = BathColumns::kInput;
  Solver solver = Solver::kAuto;
  std::optional<SweepConfig> sweep;

  /// Validated document this config was parsed from.
  nlohmann::json source;

  NetworkSpec network() const;
};

/// Parses and validates. Throws ConfigError naming the offending field.
ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config(const std::string& path);

/// Bath state description -> density matrix of dimension local_dim.
DensityMatrix parse_state(const nlohmann::json& j, std::size_t local_dim,
                          const std::string& field);

/// 64-bit FNV-1a digest of the canonical JSON dump, as 16 hex digits.
std::string config_digest(const nlohmann::json& j);

}  // namespace mediahom
