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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mediahom {

/// Rectangular table of reals. Failed points carry a non-zero "status" cell
/// rather than missing values.
class ResultTable {
 public:
  ResultTable() = default;
  explicit ResultTable(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  std::size_t column_index(const std::string& name) const;
  double at(std::size_t row, const std::string& column) const;

  /// Throws ArgumentError unless row.size() == columns().size().
  void add_row(std::vector<double> row);
  /// Appends all rows of `other`; column names must match.
  void append(const ResultTable& other);

  /// Insertion-ordered key/value pairs, written as comment lines.
  std::vector<std::pair<std::string, std::string>> metadata;
  /// Non-reproducible values (wall time) kept apart from `metadata`.
  std::vector<std::pair<std::string, std::string>> volatile_metadata;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

/// Status codes stored in the "status" column.
namespace status {
inline constexpr double kOk = 0;
inline constexpr double kNotConverged = 1;
inline constexpr double kNotRelaxing = 2;
inline constexpr double kUndefinedRatio = 3;
inline constexpr double kNumerical = 4;
}  // namespace status

/// 12 significant digits, '.' separator, independent of the global locale.
std::string format_real(double v);

/// Header row, then one line per row. With `with_metadata`, "# key=value"
/// comment lines follow the data.
void emit_csv(const ResultTable& table, std::ostream& out, bool with_metadata = false);
/// Throws IoError naming the path when the file cannot be written.
void emit_csv(const ResultTable& table, const std::filesystem::path& path,
              bool with_metadata = false);

}  // namespace mediahom
