//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <vector>

namespace chembench::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 if absent
};

/// RFC-4180-style parse (quoted fields, embedded commas/newlines).
Table read_file(const std::string& path);
Table read_string(const std::string& text);

std::string escape(const std::string& field);
std::string join_row(const std::vector<std::string>& fields);
void write_file(const std::string& path, const Table& table);

}  // namespace chembench::csv
