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

#include "mediahom/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "mediahom/errors.hpp"

namespace mediahom {

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

std::size_t ResultTable::column_index(const std::string& name) const {
  for (std::size_t k = 0; k < columns_.size(); ++k) {
    if (columns_[k] == name) return k;
  }
  throw ArgumentError("ResultTable: no column named '" + name + "'");
}

double ResultTable::at(std::size_t row, const std::string& column) const {
  if (row >= rows_.size()) throw ArgumentError("ResultTable: row index out of range");
  return rows_[row][column_index(column)];
}

void ResultTable::add_row(std::vector<double> row) {
  if (row.size() != columns_.size()) {
    throw ArgumentError("ResultTable: row has " + std::to_string(row.size()) +
                        " cells, table has " + std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(row));
}

void ResultTable::append(const ResultTable& other) {
  if (other.columns_ != columns_) throw ArgumentError("ResultTable: column mismatch on append");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

namespace {

std::string quote_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void emit_csv(const ResultTable& table, std::ostream& out, bool with_metadata) {
  const auto& cols = table.columns();
  for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << quote_field(cols[k]);
  out << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_real(row[k]);
    out << '\n';
  }
  if (with_metadata) {
    for (const auto& [k, v] : table.metadata) out << "# " << k << '=' << v << '\n';
    for (const auto& [k, v] : table.volatile_metadata) out << "# " << k << '=' << v << '\n';
  }
}

void emit_csv(const ResultTable& table, const std::filesystem::path& path, bool with_metadata) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  emit_csv(table, out, with_metadata);
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace mediahom
