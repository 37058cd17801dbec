//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "chembench/chem.hpp"
#include "chembench/rng.hpp"

namespace chembench::testing {

// Emits a valid SMILES for the molecule with a randomized atom order:
// random roots, shuffled neighbor order, every atom bracketed and every
// bond explicit, so no implicit-hydrogen or aromatic-default rules are
// exercised on the way back in. Used as the permutation oracle for
// canonicalization tests.
inline std::string random_smiles(const chem::Molecule& mol, Rng& rng) {
  const std::size_t n = mol.atom_count();
  std::vector<bool> visited(n, false);
  std::vector<bool> bond_done(mol.bond_count(), false);
  std::vector<std::vector<int>> children(n);
  std::vector<int> parent_bond(n, -1);
  std::vector<std::vector<int>> ring_at(n);

  auto plan = [&](auto&& self, int u) -> void {
    visited[u] = true;
    auto nbs = mol.adjacency()[u];
    rng.shuffle(nbs);
    for (auto [nb, bi] : nbs) {
      if (bond_done[bi]) continue;
      bond_done[bi] = true;
      if (visited[nb]) {
        ring_at[u].push_back(bi);
        ring_at[nb].push_back(bi);
      } else {
        parent_bond[nb] = bi;
        children[u].push_back(nb);
        self(self, nb);
      }
    }
  };

  std::vector<int> roots;
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  rng.shuffle(order);
  for (int a : order) {
    if (!visited[a]) {
      plan(plan, a);
      roots.push_back(a);
    }
  }

  std::map<int, int> digit_of;
  std::vector<bool> taken(100, false);
  auto bond_sym = [&](int bi) -> std::string {
    const auto& b = mol.bonds[bi];
    if (b.aromatic) return ":";
    if (b.order == 2) return "=";
    if (b.order == 3) return "#";
    return "-";
  };
  auto atom_tok = [&](int a) {
    const auto& at = mol.atoms[a];
    std::string sym = at.element;
    if (at.aromatic)
      for (auto& c : sym) c = static_cast<char>(std::tolower(c));
    std::string t = "[";
    if (at.isotope > 0) t += std::to_string(at.isotope);
    t += sym;
    if (at.total_h == 1)
      t += "H";
    else if (at.total_h > 1)
      t += "H" + std::to_string(at.total_h);
    if (at.charge != 0) {
      t += at.charge > 0 ? '+' : '-';
      if (std::abs(at.charge) > 1) t += std::to_string(std::abs(at.charge));
    }
    return t + "]";
  };

  std::string out;
  auto write = [&](auto&& self, int u) -> void {
    if (parent_bond[u] >= 0) out += bond_sym(parent_bond[u]);
    out += atom_tok(u);
    for (int bi : ring_at[u]) {
      out += bond_sym(bi);
      auto it = digit_of.find(bi);
      int d;
      if (it == digit_of.end()) {
        d = 1;
        while (taken[d]) ++d;
        taken[d] = true;
        digit_of[bi] = d;
      } else {
        d = it->second;
        taken[d] = false;
        digit_of.erase(it);
      }
      if (d < 10)
        out += static_cast<char>('0' + d);
      else
        out += "%" + std::to_string(d);
    }
    for (std::size_t i = 0; i < children[u].size(); ++i) {
      bool last = i + 1 == children[u].size();
      if (!last) out += '(';
      self(self, children[u][i]);
      if (!last) out += ')';
    }
  };
  for (std::size_t r = 0; r < roots.size(); ++r) {
    if (r) out += '.';
    write(write, roots[r]);
  }
  return out;
}

}  // namespace chembench::testing
