//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chembench::chem {

struct Atom {
  std::string element;  // symbol, e.g. "C", "Cl"
  int charge = 0;
  int total_h = 0;  // explicit (bracket) + implicit hydrogens
  bool aromatic = false;
  bool in_ring = false;
  bool bracket = false;  // written in brackets: H count / charge authoritative
  int isotope = 0;       // 0 = unspecified
};

struct Bond {
  int a = 0;
  int b = 0;
  int order = 1;  // 1, 2, 3 (kept at the written order for promoted rings)
  bool aromatic = false;
};

class Molecule {
 public:
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  std::vector<std::vector<int>> rings;  // SSSR atom cycles, in cycle order

  std::size_t atom_count() const { return atoms.size(); }
  std::size_t bond_count() const { return bonds.size(); }

  /// Neighbor list as (atom index, bond index) pairs.
  const std::vector<std::vector<std::pair<int, int>>>& adjacency() const {
    return adj_;
  }
  int degree(int atom) const { return static_cast<int>(adj_[atom].size()); }
  /// Bond index between two atoms, -1 if not bonded.
  int bond_between(int a, int b) const;
  bool bond_in_ring(int bond) const { return bond_ring_[bond]; }
  /// Number of SSSR rings the atom belongs to.
  int ring_count_of(int atom) const { return atom_ring_count_[atom]; }

  /// Builds adjacency, perceives rings, sets ring flags. Called by the
  /// parser; call again after structural edits.
  void finalize();

 private:
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<bool> bond_ring_;
  std::vector<int> atom_ring_count_;
};

int atomic_number(const std::string& symbol);  // 0 if unknown
double atomic_mass(const std::string& symbol);
bool organic_subset(const std::string& symbol);
bool aromatic_subset(const std::string& symbol);  // b c n o p s

/// Hydrogen count the organic-subset valence rules imply for this atom in
/// its current bond environment; -1 when the element has no default valence.
int implied_hydrogens(const Molecule& m, int atom);

Molecule parse_smiles(const std::string& text);
std::string canonical_smiles(const Molecule& m);
inline std::string canonical_smiles(const std::string& text) {
  return canonical_smiles(parse_smiles(text));
}

// -- Patterns -----------------------------------------------------------

namespace detail {
struct SmartsQuery;
struct TextQuery;
}  // namespace detail

enum class PatternKind { substructure, text };

/// Compiled substructure (SMARTS subset) or text (regex over canonical
/// SMILES) predicate. Compilation failures throw ParseError at compile
/// time; matching never fails.
class Pattern {
 public:
  static Pattern compile(PatternKind kind, const std::string& source);

  PatternKind kind() const { return kind_; }
  const std::string& source() const { return source_; }

  /// Distinct embeddings (substructure, deduplicated by matched atom set)
  /// or non-overlapping regex matches against the canonical SMILES.
  int match_count(const Molecule& m) const;
  /// Same, with the canonical SMILES precomputed by the caller (only
  /// consulted for text patterns).
  int match_count(const Molecule& m, const std::string& canonical) const;

 private:
  Pattern() = default;
  PatternKind kind_ = PatternKind::substructure;
  std::string source_;
  std::shared_ptr<const detail::SmartsQuery> smarts_;
  std::shared_ptr<const detail::TextQuery> text_;
};

inline int match_pattern(const Molecule& m, const Pattern& p) {
  return p.match_count(m);
}

}  // namespace chembench::chem
