//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cstdint>
#include <deque>
#include <vector>

#include "chembench/chem.hpp"
#include "chembench/errors.hpp"

namespace chembench::chem {

namespace {

using EdgeSet = std::vector<std::uint64_t>;  // bitset over bond indices

EdgeSet make_edge_set(std::size_t n_bonds) {
  return EdgeSet((n_bonds + 63) / 64, 0);
}
void set_edge(EdgeSet& s, int bond) { s[bond / 64] |= 1ULL << (bond % 64); }
bool empty_set(const EdgeSet& s) {
  for (auto w : s)
    if (w) return false;
  return true;
}
void xor_into(EdgeSet& a, const EdgeSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}
int lowest_edge(const EdgeSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i]) return static_cast<int>(i * 64 + __builtin_ctzll(s[i]));
  }
  return -1;
}

struct Cycle {
  std::vector<int> atoms;  // in cycle order
  EdgeSet edges;
};

// Shortest cycle through the given bond: BFS between its endpoints with the
// bond itself removed.
std::vector<int> shortest_cycle_through(const Molecule& m, int bond) {
  const int src = m.bonds[bond].a;
  const int dst = m.bonds[bond].b;
  std::vector<int> parent(m.atom_count(), -1);
  std::deque<int> queue{src};
  parent[src] = src;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur == dst) break;
    for (auto [nb, bi] : m.adjacency()[cur]) {
      if (bi == bond || parent[nb] != -1) continue;
      parent[nb] = cur;
      queue.push_back(nb);
    }
  }
  if (parent[dst] == -1) return {};  // bridge bond, no cycle
  std::vector<int> path;
  for (int at = dst; at != src; at = parent[at]) path.push_back(at);
  path.push_back(src);
  return path;  // dst .. src; closing bond (src,dst) completes the cycle
}

// Canonical key so the same cycle found through different bonds collapses.
std::vector<int> cycle_key(const std::vector<int>& atoms) {
  std::vector<int> key = atoms;
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

int Molecule::bond_between(int a, int b) const {
  for (auto [nb, bi] : adj_[a]) {
    if (nb == b) return bi;
  }
  return -1;
}

void Molecule::finalize() {
  adj_.assign(atoms.size(), {});
  for (std::size_t i = 0; i < bonds.size(); ++i) {
    const Bond& bd = bonds[i];
    if (bd.a < 0 || bd.b < 0 || bd.a >= static_cast<int>(atoms.size()) ||
        bd.b >= static_cast<int>(atoms.size()) || bd.a == bd.b) {
      throw DataError("bond endpoints out of range");
    }
    adj_[bd.a].emplace_back(bd.b, static_cast<int>(i));
    adj_[bd.b].emplace_back(bd.a, static_cast<int>(i));
  }

  bond_ring_.assign(bonds.size(), false);
  atom_ring_count_.assign(atoms.size(), 0);
  rings.clear();

  // Candidate rings: the shortest cycle through every non-bridge bond.
  std::vector<Cycle> candidates;
  std::vector<std::vector<int>> seen_keys;
  for (std::size_t bi = 0; bi < bonds.size(); ++bi) {
    auto atoms_cycle = shortest_cycle_through(*this, static_cast<int>(bi));
    if (atoms_cycle.empty()) continue;
    bond_ring_[bi] = true;
    auto key = cycle_key(atoms_cycle);
    if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end())
      continue;
    seen_keys.push_back(key);
    Cycle c;
    c.atoms = atoms_cycle;
    c.edges = make_edge_set(bonds.size());
    for (std::size_t i = 0; i < atoms_cycle.size(); ++i) {
      int u = atoms_cycle[i];
      int v = atoms_cycle[(i + 1) % atoms_cycle.size()];
      set_edge(c.edges, bond_between(u, v));
    }
    candidates.push_back(std::move(c));
  }
  if (candidates.empty()) return;

  // Every bond on any of these shortest cycles is a ring bond.
  for (const auto& c : candidates) {
    for (std::size_t w = 0; w < c.edges.size(); ++w) {
      for (std::uint64_t bits = c.edges[w]; bits; bits &= bits - 1) {
        bond_ring_[w * 64 + __builtin_ctzll(bits)] = true;
      }
    }
  }

  // SSSR: greedily keep GF(2)-independent cycles, smallest first, until the
  // cyclomatic count is reached. Tie order is fixed by the sorted atom key.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Cycle& x, const Cycle& y) {
                     if (x.atoms.size() != y.atoms.size())
                       return x.atoms.size() < y.atoms.size();
                     return cycle_key(x.atoms) < cycle_key(y.atoms);
                   });

  std::size_t components = 0;
  {
    std::vector<bool> visited(atoms.size(), false);
    for (std::size_t s = 0; s < atoms.size(); ++s) {
      if (visited[s]) continue;
      ++components;
      std::deque<int> queue{static_cast<int>(s)};
      visited[s] = true;
      while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (auto [nb, bi] : adj_[cur]) {
          (void)bi;
          if (!visited[nb]) {
            visited[nb] = true;
            queue.push_back(nb);
          }
        }
      }
    }
  }
  const std::size_t cyclomatic = bonds.size() + components - atoms.size();

  std::vector<EdgeSet> basis;  // row-reduced, pivot = lowest edge
  for (const auto& c : candidates) {
    if (rings.size() == cyclomatic) break;
    EdgeSet reduced = c.edges;
    for (const auto& row : basis) {
      int pivot = lowest_edge(row);
      if (pivot >= 0 && (reduced[pivot / 64] >> (pivot % 64)) & 1)
        xor_into(reduced, row);
    }
    if (empty_set(reduced)) continue;  // dependent
    basis.push_back(reduced);
    rings.push_back(c.atoms);
  }

  for (const auto& ring : rings) {
    for (int at : ring) ++atom_ring_count_[at];
  }
}

int implied_hydrogens(const Molecule& m, int atom) {
  const Atom& a = m.atoms[atom];
  // Bare aromatic heteroatoms never carry implicit hydrogens; pyrrole-type
  // NH must be written [nH].
  if (a.aromatic && a.element != "C" && a.element != "B") return 0;

  int bond_sum = 0;
  for (auto [nb, bi] : m.adjacency()[atom]) {
    (void)nb;
    bond_sum += m.bonds[bi].aromatic ? 1 : m.bonds[bi].order;
  }
  if (a.aromatic) bond_sum += 1;  // one delocalized pi bond

  static const struct {
    const char* sym;
    int valences[3];
    int count;
  } kValences[] = {
      {"B", {3, 0, 0}, 1},  {"C", {4, 0, 0}, 1},  {"N", {3, 5, 0}, 2},
      {"O", {2, 0, 0}, 1},  {"P", {3, 5, 0}, 2},  {"S", {2, 4, 6}, 3},
      {"F", {1, 0, 0}, 1},  {"Cl", {1, 0, 0}, 1}, {"Br", {1, 0, 0}, 1},
      {"I", {1, 0, 0}, 1},
  };
  for (const auto& v : kValences) {
    if (a.element == v.sym) {
      for (int i = 0; i < v.count; ++i) {
        if (bond_sum <= v.valences[i]) return v.valences[i] - bond_sum;
      }
      return -1;  // exceeds the highest standard valence
    }
  }
  return -1;  // no default valence for this element
}

}  // namespace chembench::chem
