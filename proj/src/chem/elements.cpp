//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <array>
#include <string>
#include <unordered_map>

#include "chembench/chem.hpp"

namespace chembench::chem {

namespace {

struct ElementInfo {
  const char* symbol;
  int number;
  double mass;
};

// Symbols and standard atomic weights for the elements the parser accepts.
// Covers the organic subset plus the bracket elements that occur in public
// screening datasets (salts, organometallics are parsed, not interpreted).
constexpr std::array<ElementInfo, 54> kElements{{
    {"H", 1, 1.008},     {"He", 2, 4.0026},   {"Li", 3, 6.94},
    {"Be", 4, 9.0122},   {"B", 5, 10.81},     {"C", 6, 12.011},
    {"N", 7, 14.007},    {"O", 8, 15.999},    {"F", 9, 18.998},
    {"Ne", 10, 20.180},  {"Na", 11, 22.990},  {"Mg", 12, 24.305},
    {"Al", 13, 26.982},  {"Si", 14, 28.085},  {"P", 15, 30.974},
    {"S", 16, 32.06},    {"Cl", 17, 35.45},   {"Ar", 18, 39.948},
    {"K", 19, 39.098},   {"Ca", 20, 40.078},  {"Ti", 22, 47.867},
    {"Cr", 24, 51.996},  {"Mn", 25, 54.938},  {"Fe", 26, 55.845},
    {"Co", 27, 58.933},  {"Ni", 28, 58.693},  {"Cu", 29, 63.546},
    {"Zn", 30, 65.38},   {"Ga", 31, 69.723},  {"Ge", 32, 72.630},
    {"As", 33, 74.922},  {"Se", 34, 78.971},  {"Br", 35, 79.904},
    {"Kr", 36, 83.798},  {"Rb", 37, 85.468},  {"Sr", 38, 87.62},
    {"Zr", 40, 91.224},  {"Mo", 42, 95.95},   {"Ru", 44, 101.07},
    {"Rh", 45, 102.91},  {"Pd", 46, 106.42},  {"Ag", 47, 107.87},
    {"Cd", 48, 112.41},  {"In", 49, 114.82},  {"Sn", 50, 118.71},
    {"Sb", 51, 121.76},  {"Te", 52, 127.60},  {"I", 53, 126.90},
    {"Xe", 54, 131.29},  {"Cs", 55, 132.91},  {"Ba", 56, 137.33},
    {"Pt", 78, 195.08},  {"Au", 79, 196.97},  {"Hg", 80, 200.59},
}};

const std::unordered_map<std::string, const ElementInfo*>& table() {
  static const auto* map = [] {
    auto* m = new std::unordered_map<std::string, const ElementInfo*>();
    for (const auto& e : kElements) (*m)[e.symbol] = &e;
    return m;
  }();
  return *map;
}

}  // namespace

int atomic_number(const std::string& symbol) {
  auto it = table().find(symbol);
  return it == table().end() ? 0 : it->second->number;
}

double atomic_mass(const std::string& symbol) {
  auto it = table().find(symbol);
  return it == table().end() ? 0.0 : it->second->mass;
}

bool organic_subset(const std::string& symbol) {
  return symbol == "B" || symbol == "C" || symbol == "N" || symbol == "O" ||
         symbol == "P" || symbol == "S" || symbol == "F" || symbol == "Cl" ||
         symbol == "Br" || symbol == "I";
}

bool aromatic_subset(const std::string& symbol) {
  return symbol == "B" || symbol == "C" || symbol == "N" || symbol == "O" ||
         symbol == "P" || symbol == "S";
}

}  // namespace chembench::chem
