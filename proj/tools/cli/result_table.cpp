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

#include "result_table.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <system_error>

namespace gravphase::cli {

namespace {

std::optional<std::int64_t> as_integer(std::string_view text) {
  std::int64_t v = 0;
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    return std::nullopt;
  }
  return v;
}

std::optional<double> as_double(std::string_view text) {
  double v = 0.0;
  const auto *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    return std::nullopt;
  }
  return v;
}

bool needs_quotes(std::string_view s) {
  if (s.find_first_of(",\"\n\r") != std::string_view::npos) {
    return true;
  }
  return as_integer(s) || as_double(s) || s.empty();
}

std::string render(const Cell &cell) {
  struct Visitor {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string &s) const {
      if (!needs_quotes(s)) {
        return s;
      }
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') {
          out += '"';
        }
        out += ch;
      }
      out += '"';
      return out;
    }
  };
  return std::visit(Visitor{}, cell);
}

// One parsed CSV field; `quoted` keeps "42" a string on the way back in.
struct Field {
  std::string text;
  bool quoted = false;
};

std::vector<Field> split_record(std::string_view line) {
  std::vector<Field> fields;
  Field current;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.text += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        current.text += ch;
      }
    } else if (ch == '"') {
      in_quotes = true;
      current.quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(current));
      current = Field{};
    } else {
      current.text += ch;
    }
  }
  if (in_quotes) {
    throw std::invalid_argument("unterminated quoted CSV field");
  }
  fields.push_back(std::move(current));
  return fields;
}

Cell to_cell(const Field &field) {
  if (field.quoted) {
    return field.text;
  }
  if (auto i = as_integer(field.text)) {
    return *i;
  }
  if (auto d = as_double(field.text)) {
    return *d;
  }
  return field.text;
}

nlohmann::ordered_json cell_json(const Cell &cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (std::isfinite(v)) {
        return v;
      }
      // JSON has no inf/nan literal.
      return format_double(v);
    }
    nlohmann::ordered_json operator()(const std::string &s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

} // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                       std::chars_format::general, 17);
  if (ec != std::errc{}) {
    throw std::runtime_error("failed to format double");
  }
  std::string out(buf, ptr);
  if (out.find_first_of(".eEin") == std::string::npos) {
    out += ".0";
  }
  return out;
}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw std::invalid_argument("row has " + std::to_string(row.size()) +
                                " cells, table has " +
                                std::to_string(columns_.size()) + " columns");
  }
  rows_.push_back(std::move(row));
}

void ResultTable::add_provenance(std::string key, std::string value) {
  provenance_.emplace_back(std::move(key), std::move(value));
}

std::string ResultTable::to_csv() const {
  std::string out;
  for (const auto &[key, value] : provenance_) {
    out += "# " + key + "=" + value + "\n";
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    out += (i ? "," : "") + render(columns_[i]);
  }
  out += "\n";
  for (const auto &row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += (i ? "," : "") + render(row[i]);
    }
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json
ResultTable::to_json(const nlohmann::ordered_json &inputs) const {
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto &row : rows_) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[columns_[i]] = cell_json(row[i]);
    }
    results.push_back(std::move(obj));
  }
  nlohmann::ordered_json prov = nlohmann::ordered_json::object();
  for (const auto &[key, value] : provenance_) {
    prov[key] = value;
  }
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["inputs"] = inputs;
  doc["results"] = std::move(results);
  doc["provenance"] = std::move(prov);
  return doc;
}

ResultTable parse_csv(std::string_view text) {
  ResultTable table;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) {
      continue;
    }
    if (!have_header && line.starts_with("# ")) {
      const auto body = line.substr(2);
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) {
        throw std::invalid_argument("malformed provenance line");
      }
      table.add_provenance(std::string(body.substr(0, eq)),
                           std::string(body.substr(eq + 1)));
      continue;
    }
    const auto fields = split_record(line);
    if (!have_header) {
      std::vector<std::string> columns;
      for (const auto &f : fields) {
        columns.push_back(f.text);
      }
      ResultTable next(std::move(columns));
      for (const auto &[k, v] : table.provenance()) {
        next.add_provenance(k, v);
      }
      table = std::move(next);
      have_header = true;
      continue;
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (const auto &f : fields) {
      row.push_back(to_cell(f));
    }
    table.add_row(std::move(row));
  }
  return table;
}

} // namespace gravphase::cli
