//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "chembench/chem.hpp"
#include "chembench/errors.hpp"

namespace chembench::chem {

namespace {

enum class BondTok { none, single, db, triple, arom };

struct PendingRing {
  int atom;
  BondTok tok;
  std::size_t pos;
};

struct ParserState {
  const std::string& text;
  std::size_t i = 0;
  Molecule mol;
  std::vector<std::size_t> atom_pos;
  int prev = -1;
  BondTok pending = BondTok::none;
  std::size_t pending_pos = 0;
  std::vector<std::pair<int, std::size_t>> branch_stack;  // (atom, '(' pos)
  std::map<int, PendingRing> open_rings;

  explicit ParserState(const std::string& t) : text(t) {}

  char peek() const { return i < text.size() ? text[i] : '\0'; }
  char take() { return text[i++]; }
  bool done() const { return i >= text.size(); }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  void add_bond(int a, int b, BondTok tok, std::size_t pos) {
    if (a == b) fail("ring closure bonds an atom to itself", pos);
    Bond bd;
    bd.a = a;
    bd.b = b;
    switch (tok) {
      case BondTok::none:
        if (mol.atoms[a].aromatic && mol.atoms[b].aromatic) {
          bd.order = 1;
          bd.aromatic = true;
        } else {
          bd.order = 1;
        }
        break;
      case BondTok::single:
        bd.order = 1;
        break;
      case BondTok::db:
        bd.order = 2;
        break;
      case BondTok::triple:
        bd.order = 3;
        break;
      case BondTok::arom:
        if (!mol.atoms[a].aromatic || !mol.atoms[b].aromatic)
          fail("aromatic bond requires two aromatic atoms", pos);
        bd.order = 1;
        bd.aromatic = true;
        break;
    }
    for (const Bond& existing : mol.bonds) {
      if ((existing.a == a && existing.b == b) ||
          (existing.a == b && existing.b == a))
        fail("duplicate bond", pos);
    }
    mol.bonds.push_back(bd);
  }

  void on_atom(Atom atom, std::size_t pos) {
    mol.atoms.push_back(std::move(atom));
    atom_pos.push_back(pos);
    int idx = static_cast<int>(mol.atoms.size()) - 1;
    if (prev >= 0) add_bond(prev, idx, pending, pending_pos);
    pending = BondTok::none;
    prev = idx;
  }

  void on_ring_digit(int digit, std::size_t pos) {
    if (prev < 0) fail("ring closure before any atom", pos);
    auto it = open_rings.find(digit);
    if (it == open_rings.end()) {
      open_rings[digit] = {prev, pending, pos};
    } else {
      BondTok tok = pending;
      if (tok == BondTok::none) {
        tok = it->second.tok;
      } else if (it->second.tok != BondTok::none && it->second.tok != tok) {
        fail("conflicting bond symbols on ring closure", pos);
      }
      add_bond(it->second.atom, prev, tok, pos);
      open_rings.erase(it);
    }
    pending = BondTok::none;
  }
};

int read_digits(ParserState& st, int max_chars) {
  int value = 0;
  int used = 0;
  while (!st.done() && std::isdigit(static_cast<unsigned char>(st.peek())) &&
         used < max_chars) {
    value = value * 10 + (st.take() - '0');
    ++used;
  }
  return used == 0 ? -1 : value;
}

// [isotope? symbol chirality? Hcount? charge? map?]
void parse_bracket(ParserState& st) {
  const std::size_t open_pos = st.i - 1;
  Atom atom;
  atom.bracket = true;

  int isotope = read_digits(st, 3);
  if (isotope >= 0) atom.isotope = isotope;

  if (st.done()) st.fail("unterminated bracket atom", open_pos);
  std::size_t sym_pos = st.i;
  char c = st.take();
  std::string symbol;
  if (std::isupper(static_cast<unsigned char>(c))) {
    symbol += c;
    if (!st.done() && std::islower(static_cast<unsigned char>(st.peek()))) {
      std::string two = symbol + st.peek();
      if (atomic_number(two) != 0) {
        symbol = two;
        st.take();
      }
    }
  } else if (std::islower(static_cast<unsigned char>(c))) {
    symbol += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (!aromatic_subset(symbol))
      st.fail("element cannot be aromatic", sym_pos);
    atom.aromatic = true;
  } else {
    st.fail("expected element symbol in bracket", sym_pos);
  }
  if (atomic_number(symbol) == 0) st.fail("unknown element", sym_pos);
  atom.element = symbol;

  while (!st.done() && st.peek() == '@') st.take();  // stereo: discarded

  if (!st.done() && st.peek() == 'H') {
    st.take();
    int h = read_digits(st, 2);
    atom.total_h = h >= 0 ? h : 1;
  }

  if (!st.done() && (st.peek() == '+' || st.peek() == '-')) {
    char sign = st.take();
    int mag = read_digits(st, 2);
    if (mag < 0) {
      mag = 1;
      while (!st.done() && st.peek() == sign) {
        st.take();
        ++mag;
      }
    }
    atom.charge = sign == '+' ? mag : -mag;
  }

  if (!st.done() && st.peek() == ':') {  // atom map: discarded
    st.take();
    if (read_digits(st, 5) < 0) st.fail("expected atom-map number", st.i);
  }

  if (st.done() || st.take() != ']')
    st.fail("unterminated bracket atom", open_pos);
  st.on_atom(std::move(atom), open_pos);
}

void promote_kekule_benzenoids(Molecule& mol) {
  for (const auto& ring : mol.rings) {
    if (ring.size() != 6) continue;
    bool eligible = true;
    for (int at : ring) {
      if (mol.atoms[at].element != "C" || mol.atoms[at].aromatic) {
        eligible = false;
        break;
      }
    }
    if (!eligible) continue;
    std::vector<int> ring_bonds;
    for (std::size_t i = 0; i < 6 && eligible; ++i) {
      int bi = mol.bond_between(ring[i], ring[(i + 1) % 6]);
      if (bi < 0 || mol.bonds[bi].aromatic || mol.bonds[bi].order == 3) {
        eligible = false;
        break;
      }
      ring_bonds.push_back(bi);
    }
    if (!eligible) continue;
    bool alternating = true;
    for (std::size_t i = 0; i < 6; ++i) {
      int cur = mol.bonds[ring_bonds[i]].order;
      int nxt = mol.bonds[ring_bonds[(i + 1) % 6]].order;
      if (cur + nxt != 3) {  // must alternate 1/2
        alternating = false;
        break;
      }
    }
    if (!alternating) continue;
    for (int at : ring) mol.atoms[at].aromatic = true;
    for (int bi : ring_bonds) mol.bonds[bi].aromatic = true;
  }
}

}  // namespace

Molecule parse_smiles(const std::string& text) {
  if (text.empty()) throw ParseError("empty SMILES", 0);
  ParserState st(text);

  while (!st.done()) {
    const std::size_t pos = st.i;
    const char c = st.take();
    switch (c) {
      case '-':
      case '/':
      case '\\':  // stereo bonds accepted, direction discarded
        st.pending = BondTok::single;
        st.pending_pos = pos;
        break;
      case '=':
        st.pending = BondTok::db;
        st.pending_pos = pos;
        break;
      case '#':
        st.pending = BondTok::triple;
        st.pending_pos = pos;
        break;
      case ':':
        st.pending = BondTok::arom;
        st.pending_pos = pos;
        break;
      case '(': {
        if (st.prev < 0) st.fail("branch before any atom", pos);
        if (st.pending != BondTok::none)
          st.fail("bond symbol before branch open", pos);
        st.branch_stack.emplace_back(st.prev, pos);
        break;
      }
      case ')': {
        if (st.branch_stack.empty()) st.fail("unbalanced ')'", pos);
        if (st.pending != BondTok::none)
          st.fail("dangling bond symbol before ')'", pos);
        st.prev = st.branch_stack.back().first;
        st.branch_stack.pop_back();
        break;
      }
      case '.': {
        if (!st.branch_stack.empty())
          st.fail("fragment separator inside branch", pos);
        if (st.pending != BondTok::none)
          st.fail("bond symbol before fragment separator", pos);
        st.prev = -1;
        break;
      }
      case '%': {
        int num = read_digits(st, 2);
        if (num < 0) st.fail("expected two-digit ring closure", pos);
        st.on_ring_digit(num, pos);
        break;
      }
      case '0':
      case '1':
      case '2':
      case '3':
      case '4':
      case '5':
      case '6':
      case '7':
      case '8':
      case '9':
        st.on_ring_digit(c - '0', pos);
        break;
      case '[':
        parse_bracket(st);
        break;
      default: {
        if (std::isupper(static_cast<unsigned char>(c))) {
          std::string symbol(1, c);
          // Two-letter organic-subset symbols: Cl, Br.
          if (!st.done() &&
              ((c == 'C' && st.peek() == 'l') || (c == 'B' && st.peek() == 'r')))
            symbol += st.take();
          if (!organic_subset(symbol))
            st.fail("unknown element (organic subset expected)", pos);
          Atom atom;
          atom.element = symbol;
          st.on_atom(std::move(atom), pos);
        } else if (std::islower(static_cast<unsigned char>(c))) {
          std::string symbol(
              1, static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
          if (!aromatic_subset(symbol))
            st.fail("unknown aromatic element", pos);
          Atom atom;
          atom.element = symbol;
          atom.aromatic = true;
          st.on_atom(std::move(atom), pos);
        } else if (std::isspace(static_cast<unsigned char>(c))) {
          if (!st.done()) st.fail("whitespace inside SMILES", pos);
        } else {
          st.fail("unexpected character", pos);
        }
      }
    }
  }

  if (!st.branch_stack.empty())
    st.fail("unbalanced '('", st.branch_stack.back().second);
  if (!st.open_rings.empty())
    st.fail("unclosed ring bond", st.open_rings.begin()->second.pos);
  if (st.pending != BondTok::none)
    st.fail("dangling bond symbol", st.pending_pos);
  if (st.mol.atoms.empty()) throw ParseError("no atoms in SMILES", 0);

  Molecule& mol = st.mol;
  mol.finalize();

  for (std::size_t a = 0; a < mol.atom_count(); ++a) {
    bool in_ring = false;
    for (auto [nb, bi] : mol.adjacency()[a]) {
      (void)nb;
      if (mol.bond_in_ring(bi)) in_ring = true;
    }
    mol.atoms[a].in_ring = in_ring;
    if (mol.atoms[a].aromatic && !in_ring)
      st.fail("aromatic atom outside of a ring", st.atom_pos[a]);
  }

  promote_kekule_benzenoids(mol);

  for (std::size_t a = 0; a < mol.atom_count(); ++a) {
    if (mol.atoms[a].bracket) continue;
    int h = implied_hydrogens(mol, static_cast<int>(a));
    if (h < 0) st.fail("valence violation", st.atom_pos[a]);
    mol.atoms[a].total_h = h;
  }

  return mol;
}

}  // namespace chembench::chem
