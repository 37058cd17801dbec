//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chembench::testing {

inline std::vector<std::string> load_corpus() {
  std::string path = std::string(CHEMBENCH_TEST_DATA) + "/corpus_smiles.txt";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing corpus fixture: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace chembench::testing
