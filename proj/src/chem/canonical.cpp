//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "chembench/chem.hpp"
#include "chembench/errors.hpp"

namespace chembench::chem {

namespace {

int bond_code(const Bond& b) { return b.aromatic ? 4 : b.order; }

// Morgan-style neighborhood refinement. Ranks need not be contiguous on
// input; output ranks are contiguous and permutation-invariant.
std::vector<int> refine(const Molecule& mol, std::vector<int> ranks) {
  const std::size_t n = mol.atom_count();
  using Key = std::pair<int, std::vector<std::pair<int, int>>>;
  for (std::size_t iter = 0; iter < 2 * n + 2; ++iter) {
    std::vector<Key> keys(n);
    for (std::size_t a = 0; a < n; ++a) {
      keys[a].first = ranks[a];
      for (auto [nb, bi] : mol.adjacency()[a])
        keys[a].second.emplace_back(bond_code(mol.bonds[bi]), ranks[nb]);
      std::sort(keys[a].second.begin(), keys[a].second.end());
    }
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (std::size_t a = 0; a < n; ++a) {
      next[a] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), keys[a]) -
          sorted.begin());
    }
    if (next == ranks) break;
    ranks = std::move(next);
  }
  return ranks;
}

std::vector<int> initial_ranks(const Molecule& mol) {
  const std::size_t n = mol.atom_count();
  using Key = std::tuple<int, int, int, int, bool, bool, int>;
  std::vector<Key> keys(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Atom& at = mol.atoms[a];
    keys[a] = {atomic_number(at.element), at.charge,
               mol.degree(static_cast<int>(a)), at.total_h,
               at.in_ring, at.aromatic, at.isotope};
  }
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ranks(n);
  for (std::size_t a = 0; a < n; ++a) {
    ranks[a] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[a]) -
        sorted.begin());
  }
  return ranks;
}

// ---------------------------------------------------------------- writer

bool needs_bond_symbol(const Molecule& mol, int bond) {
  const Bond& b = mol.bonds[bond];
  if (b.aromatic) return false;  // default between aromatic atoms
  if (b.order == 1) {
    // A plain single bond between two aromatic atoms would re-parse as
    // aromatic; force '-' (biphenyl-type linkages).
    return mol.atoms[b.a].aromatic && mol.atoms[b.b].aromatic;
  }
  return true;
}

std::string bond_symbol(const Bond& b) {
  if (b.aromatic) return ":";
  switch (b.order) {
    case 2:
      return "=";
    case 3:
      return "#";
    default:
      return "-";
  }
}

std::string atom_token(const Molecule& mol, int idx) {
  const Atom& a = mol.atoms[idx];
  std::string sym = a.element;
  if (a.aromatic) {
    for (auto& c : sym) c = static_cast<char>(std::tolower(c));
  }
  const bool bare_ok = a.charge == 0 && a.isotope == 0 &&
                       organic_subset(a.element) &&
                       (!a.aromatic || aromatic_subset(a.element)) &&
                       implied_hydrogens(mol, idx) == a.total_h;
  if (bare_ok) return sym;
  std::string out = "[";
  if (a.isotope > 0) out += std::to_string(a.isotope);
  out += sym;
  if (a.total_h == 1) {
    out += 'H';
  } else if (a.total_h > 1) {
    out += 'H';
    out += std::to_string(a.total_h);
  }
  if (a.charge != 0) {
    out += a.charge > 0 ? '+' : '-';
    if (std::abs(a.charge) > 1) out += std::to_string(std::abs(a.charge));
  }
  out += ']';
  return out;
}

struct Writer {
  const Molecule& mol;
  const std::vector<int>& rank;
  std::vector<bool> visited;
  std::vector<std::vector<int>> tree_children;  // ordered by rank
  std::vector<int> parent_bond;
  std::vector<std::vector<int>> ring_bonds_at;  // bond indices, plan order
  std::vector<bool> bond_done;
  std::map<int, int> digit_of_bond;
  std::vector<bool> digit_taken;
  std::string out;

  Writer(const Molecule& m, const std::vector<int>& r)
      : mol(m),
        rank(r),
        visited(m.atom_count(), false),
        tree_children(m.atom_count()),
        parent_bond(m.atom_count(), -1),
        ring_bonds_at(m.atom_count()),
        bond_done(m.bond_count(), false),
        digit_taken(100, false) {}

  std::vector<std::pair<int, int>> ordered_neighbors(int u) const {
    auto nbs = mol.adjacency()[u];
    std::sort(nbs.begin(), nbs.end(), [&](auto x, auto y) {
      return rank[x.first] < rank[y.first];
    });
    return nbs;
  }

  void plan(int u) {
    visited[u] = true;
    for (auto [nb, bi] : ordered_neighbors(u)) {
      if (bond_done[bi]) continue;
      bond_done[bi] = true;
      if (visited[nb]) {  // ring closure: digit appears at both ends
        ring_bonds_at[u].push_back(bi);
        ring_bonds_at[nb].push_back(bi);
      } else {
        parent_bond[nb] = bi;
        tree_children[u].push_back(nb);
        plan(nb);
      }
    }
  }

  int take_digit() {
    for (int d = 1; d < 100; ++d) {
      if (!digit_taken[d]) {
        digit_taken[d] = true;
        return d;
      }
    }
    throw DataError("ring closure digits exhausted");
  }

  void emit_digit(int d) {
    if (d < 10) {
      out += static_cast<char>('0' + d);
    } else {
      out += '%';
      out += std::to_string(d);
    }
  }

  void write(int u) {
    if (parent_bond[u] >= 0 && needs_bond_symbol(mol, parent_bond[u]))
      out += bond_symbol(mol.bonds[parent_bond[u]]);
    out += atom_token(mol, u);
    for (int bi : ring_bonds_at[u]) {
      auto it = digit_of_bond.find(bi);
      if (needs_bond_symbol(mol, bi)) out += bond_symbol(mol.bonds[bi]);
      if (it == digit_of_bond.end()) {
        int d = take_digit();
        digit_of_bond[bi] = d;
        emit_digit(d);
      } else {
        emit_digit(it->second);
        digit_taken[it->second] = false;
        digit_of_bond.erase(it);
      }
    }
    const auto& children = tree_children[u];
    for (std::size_t i = 0; i < children.size(); ++i) {
      const bool last = i + 1 == children.size();
      if (!last) out += '(';
      write(children[i]);
      if (!last) out += ')';
    }
  }
};

std::string emit_from_ranks(const Molecule& mol, const std::vector<int>& rank) {
  Writer w(mol, rank);
  // One DFS tree per connected component, rooted at the lowest rank.
  std::vector<int> roots;
  std::vector<int> order(mol.atom_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return rank[a] < rank[b]; });
  for (int a : order) {
    if (!w.visited[a]) {
      w.plan(a);
      roots.push_back(a);
    }
  }
  std::vector<std::string> parts;
  for (int root : roots) {
    w.out.clear();
    w.write(root);
    parts.push_back(w.out);
  }
  std::sort(parts.begin(), parts.end());
  std::string joined;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) joined += '.';
    joined += parts[i];
  }
  return joined;
}

// Canonical-form search: refine, then break residual ties by trying every
// atom of the first tied cell and keeping the lexicographically smallest
// emitted string. Exhaustive over the tied cell, so the result cannot
// depend on input atom order.
struct CanonSearch {
  const Molecule& mol;
  std::string best;
  bool has_best = false;
  int leaves = 0;

  explicit CanonSearch(const Molecule& m) : mol(m) {}

  void run(const std::vector<int>& ranks) {
    int tied_rank = -1;
    std::vector<int> cell;
    for (int r = 0; tied_rank < 0; ++r) {
      cell.clear();
      bool any = false;
      for (std::size_t a = 0; a < ranks.size(); ++a) {
        if (ranks[a] == r) {
          cell.push_back(static_cast<int>(a));
          any = true;
        }
      }
      if (!any) break;  // ranks are contiguous; none left
      if (cell.size() > 1) tied_rank = r;
    }
    if (tied_rank < 0) {
      if (++leaves > 20000)
        throw DataError("canonicalization budget exceeded");
      std::string s = emit_from_ranks(mol, ranks);
      if (!has_best || s < best) {
        best = std::move(s);
        has_best = true;
      }
      return;
    }
    for (int atom : cell) {
      std::vector<int> split(ranks.size());
      for (std::size_t a = 0; a < ranks.size(); ++a) split[a] = 2 * ranks[a] + 1;
      split[atom] -= 1;
      run(refine(mol, split));
    }
  }
};

}  // namespace

std::string canonical_smiles(const Molecule& m) {
  if (m.atom_count() == 0) throw DataError("empty molecule");
  CanonSearch search(m);
  search.run(refine(m, initial_ranks(m)));
  return search.best;
}

}  // namespace chembench::chem
