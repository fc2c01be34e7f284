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

#include <string>
#include <vector>

#include "mediahom/config.hpp"
#include "mediahom/csv.hpp"

namespace mediahom {

/// Runs the configured analysis. Per-point numerical failures land in the
/// "status" column; configuration problems throw ConfigError.
///
/// Columns by analysis:
///   fixed_point  S_A, S_B, R, C12, gap, relaxing, peripheral, residual,
///                iterations, solver_distance, status
///   trajectory   step, S_A, purity, C12, distance_to_previous, status
///   spectrum     index, re, im, modulus, status
///   profile      position, site, is_bath, p0, status
ResultTable run_scenario(const ScenarioConfig& cfg);

/// Runs `cfg` once per value written at JSON pointer `param`. Rows keep the
/// order of `values` whatever the execution order; `jobs` > 1 evaluates points
/// on worker threads. The first column holds the swept value (or its index
/// for non-numeric values) under `label`, which defaults to the last pointer
/// token.
ResultTable sweep(const ScenarioConfig& cfg, const std::string& param,
                  const std::vector<nlohmann::json>& values, std::string label = {},
                  std::size_t jobs = 1);

/// Sweep described by cfg.sweep. Throws ConfigError when there is none.
ResultTable sweep(const ScenarioConfig& cfg, std::size_t jobs = 1);

}  // namespace mediahom
