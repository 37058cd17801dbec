//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "chembench/csv.hpp"

#include <fstream>
#include <sstream>

#include "chembench/errors.hpp"

namespace chembench::csv {

int Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Table read_string(const std::string& text) {
  Table t;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any_field = false;

  auto end_field = [&] {
    row.push_back(field);
    field.clear();
    any_field = false;
  };
  auto end_row = [&] {
    if (t.header.empty()) {
      t.header = row;
    } else {
      t.rows.push_back(row);
    }
    row.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        any_field = true;
        break;
      case ',':
        end_field();
        any_field = true;  // a trailing comma implies one more (empty) field
        break;
      case '\r':
        break;
      case '\n':
        if (!field.empty() || any_field || !row.empty()) {
          end_field();
          end_row();
        }
        break;
      default:
        field += c;
        any_field = true;
    }
  }
  if (!field.empty() || any_field || !row.empty()) {
    end_field();
    end_row();
  }
  if (quoted) throw SchemaError("unterminated quoted CSV field");
  return t;
}

Table read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open CSV file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_string(ss.str());
}

std::string escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += escape(fields[i]);
  }
  line += '\n';
  return line;
}

void write_file(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write CSV file: " + path);
  out << join_row(table.header);
  for (const auto& row : table.rows) out << join_row(row);
}

}  // namespace chembench::csv
