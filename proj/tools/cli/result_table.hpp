// Copyright 2026 The Gravphase Authors
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
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace gravphase::cli {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Rectangular table of typed results plus an ordered provenance header.
class ResultTable {
public:
  ResultTable() = default;
  explicit ResultTable(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  const std::vector<std::string> &columns() const { return columns_; }
  const std::vector<std::vector<Cell>> &rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>> &provenance() const {
    return provenance_;
  }

  /// Throws std::invalid_argument if the row width differs from the column
  /// count.
  void add_row(std::vector<Cell> row);
  void add_provenance(std::string key, std::string value);

  /// Header comment lines (`# key=value`), one header row, then data rows.
  /// Doubles use 17 significant digits and always carry a '.' or exponent so
  /// they read back as doubles. LF line endings.
  std::string to_csv() const;

  /// {"inputs": inputs, "results": [row objects], "provenance": {...}}.
  nlohmann::ordered_json to_json(const nlohmann::ordered_json &inputs) const;

  friend bool operator==(const ResultTable &, const ResultTable &) = default;

private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, std::string>> provenance_;
};

/// 17 significant digits; '.0' appended when the text would read as an integer.
std::string format_double(double value);

/// Inverse of ResultTable::to_csv. Cells that parse as integers become
/// int64, cells with a '.', exponent, inf or nan become double, everything
/// else stays a string. Throws std::invalid_argument on ragged rows.
ResultTable parse_csv(std::string_view text);

} // namespace gravphase::cli
