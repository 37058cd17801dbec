//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "smarts.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "chembench/errors.hpp"

namespace chembench::chem::detail {

bool AtomExpr::eval(const Molecule& m, int atom) const {
  switch (op) {
    case Op::logical_and:
      for (const auto& k : kids)
        if (!k.eval(m, atom)) return false;
      return true;
    case Op::logical_or:
      for (const auto& k : kids)
        if (k.eval(m, atom)) return true;
      return false;
    case Op::logical_not:
      return !kids[0].eval(m, atom);
    case Op::prim:
      break;
  }
  const Atom& a = m.atoms[atom];
  switch (prim) {
    case Prim::any:
      return true;
    case Prim::arom_any:
      return a.aromatic;
    case Prim::aliph_any:
      return !a.aromatic;
    case Prim::element:
      return atomic_number(a.element) == value;
    case Prim::arom_element:
      return a.aromatic && atomic_number(a.element) == value;
    case Prim::aliph_element:
      return !a.aromatic && atomic_number(a.element) == value;
    case Prim::charge:
      return a.charge == value;
    case Prim::degree:
      return m.degree(atom) == value;
    case Prim::hcount:
      return a.total_h == value;
    case Prim::ring_membership:
      if (value < 0) return m.ring_count_of(atom) > 0;
      if (value == 0) return m.ring_count_of(atom) == 0;
      return m.ring_count_of(atom) == value;
  }
  return false;
}

namespace {

struct SmartsParser {
  const std::string& text;
  std::size_t i = 0;

  explicit SmartsParser(const std::string& t) : text(t) {}

  char peek() const { return i < text.size() ? text[i] : '\0'; }
  char take() { return text[i++]; }
  bool done() const { return i >= text.size(); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError("SMARTS: " + msg, at);
  }

  int read_number(int fallback) {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      return fallback;
    int v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      v = v * 10 + (take() - '0');
    return v;
  }

  // --- atom expressions (inside brackets) ----------------------------

  AtomExpr parse_primitive() {
    const std::size_t pos = i;
    if (done()) fail("expected atom primitive", pos);
    char c = take();
    AtomExpr e;
    switch (c) {
      case '*':
        e.prim = AtomExpr::Prim::any;
        return e;
      case 'a':
        e.prim = AtomExpr::Prim::arom_any;
        return e;
      case 'A':
        e.prim = AtomExpr::Prim::aliph_any;
        return e;
      case '#':
        e.prim = AtomExpr::Prim::element;
        e.value = read_number(-1);
        if (e.value <= 0) fail("expected atomic number after '#'", pos);
        return e;
      case 'D':
        e.prim = AtomExpr::Prim::degree;
        e.value = read_number(1);
        return e;
      case 'H':
        e.prim = AtomExpr::Prim::hcount;
        e.value = read_number(1);
        return e;
      case 'R':
        e.prim = AtomExpr::Prim::ring_membership;
        e.value = read_number(-1);
        return e;
      case '+':
      case '-': {
        int mag = read_number(-1);
        if (mag < 0) {
          mag = 1;
          while (!done() && peek() == c) {
            take();
            ++mag;
          }
        }
        e.prim = AtomExpr::Prim::charge;
        e.value = c == '+' ? mag : -mag;
        return e;
      }
      default:
        break;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::string sym(1, c);
      if (!done() && std::islower(static_cast<unsigned char>(peek()))) {
        std::string two = sym + peek();
        if (atomic_number(two) != 0) {
          sym = two;
          take();
        }
      }
      if (atomic_number(sym) == 0) fail("unknown element", pos);
      e.prim = AtomExpr::Prim::aliph_element;
      e.value = atomic_number(sym);
      return e;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string sym(1,
                      static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
      if (!aromatic_subset(sym)) fail("unknown aromatic element", pos);
      e.prim = AtomExpr::Prim::arom_element;
      e.value = atomic_number(sym);
      return e;
    }
    fail("unexpected character in atom expression", pos);
  }

  AtomExpr parse_not() {
    if (peek() == '!') {
      take();
      AtomExpr e;
      e.op = AtomExpr::Op::logical_not;
      e.kids.push_back(parse_not());
      return e;
    }
    return parse_primitive();
  }

  bool at_expr_end() const {
    char c = peek();
    return c == ']' || c == ',' || c == ';' || c == '\0';
  }

  AtomExpr parse_and_list() {
    AtomExpr e;
    e.op = AtomExpr::Op::logical_and;
    e.kids.push_back(parse_not());
    while (!at_expr_end()) {
      if (peek() == '&') take();  // implicit or explicit high-precedence and
      e.kids.push_back(parse_not());
    }
    return e.kids.size() == 1 ? e.kids[0] : e;
  }

  AtomExpr parse_or_list() {
    AtomExpr e;
    e.op = AtomExpr::Op::logical_or;
    e.kids.push_back(parse_and_list());
    while (peek() == ',') {
      take();
      e.kids.push_back(parse_and_list());
    }
    return e.kids.size() == 1 ? e.kids[0] : e;
  }

  AtomExpr parse_expr() {
    AtomExpr e;
    e.op = AtomExpr::Op::logical_and;
    e.kids.push_back(parse_or_list());
    while (peek() == ';') {
      take();
      e.kids.push_back(parse_or_list());
    }
    return e.kids.size() == 1 ? e.kids[0] : e;
  }

  // --- structural layer ----------------------------------------------

  SmartsQuery query;
  int prev = -1;
  BondPrim pending = BondPrim::def;
  bool pending_set = false;
  std::size_t pending_pos = 0;
  std::vector<int> branch_stack;
  std::map<int, std::pair<int, BondPrim>> open_rings;

  void add_query_bond(int a, int b, BondPrim prim, std::size_t pos) {
    if (a == b) fail("ring closure bonds an atom to itself", pos);
    for (const auto& qb : query.bonds) {
      if ((qb.a == a && qb.b == b) || (qb.a == b && qb.b == a))
        fail("duplicate bond", pos);
    }
    query.bonds.push_back({a, b, prim});
  }

  void on_atom(AtomExpr expr, std::size_t pos) {
    query.atoms.push_back(std::move(expr));
    int idx = static_cast<int>(query.atoms.size()) - 1;
    if (prev >= 0) add_query_bond(prev, idx, pending, pos);
    pending = BondPrim::def;
    pending_set = false;
    prev = idx;
  }

  void on_ring(int digit, std::size_t pos) {
    if (prev < 0) fail("ring closure before any atom", pos);
    auto it = open_rings.find(digit);
    if (it == open_rings.end()) {
      open_rings[digit] = {prev, pending_set ? pending : BondPrim::def};
    } else {
      BondPrim prim = pending_set ? pending : it->second.second;
      add_query_bond(it->second.first, prev, prim, pos);
      open_rings.erase(it);
    }
    pending = BondPrim::def;
    pending_set = false;
  }

  void set_bond(BondPrim p, std::size_t pos) {
    pending = p;
    pending_set = true;
    pending_pos = pos;
  }

  SmartsQuery run() {
    while (!done()) {
      const std::size_t pos = i;
      const char c = take();
      switch (c) {
        case '-':
          set_bond(BondPrim::single, pos);
          break;
        case '=':
          set_bond(BondPrim::db, pos);
          break;
        case '#':
          set_bond(BondPrim::triple, pos);
          break;
        case ':':
          set_bond(BondPrim::arom, pos);
          break;
        case '~':
          set_bond(BondPrim::any, pos);
          break;
        case '@':
          set_bond(BondPrim::ring, pos);
          break;
        case '(':
          if (prev < 0) fail("branch before any atom", pos);
          branch_stack.push_back(prev);
          break;
        case ')':
          if (branch_stack.empty()) fail("unbalanced ')'", pos);
          prev = branch_stack.back();
          branch_stack.pop_back();
          break;
        case '%': {
          if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected ring closure number", pos);
          int num = take() - '0';
          if (!done() && std::isdigit(static_cast<unsigned char>(peek())))
            num = num * 10 + (take() - '0');
          on_ring(num, pos);
          break;
        }
        case '[': {
          AtomExpr e = parse_expr();
          if (done() || take() != ']') fail("unterminated bracket", pos);
          on_atom(std::move(e), pos);
          break;
        }
        case '*': {
          AtomExpr e;
          e.prim = AtomExpr::Prim::any;
          on_atom(std::move(e), pos);
          break;
        }
        case 'a': {
          AtomExpr e;
          e.prim = AtomExpr::Prim::arom_any;
          on_atom(std::move(e), pos);
          break;
        }
        case 'A': {
          AtomExpr e;
          e.prim = AtomExpr::Prim::aliph_any;
          on_atom(std::move(e), pos);
          break;
        }
        default: {
          if (std::isdigit(static_cast<unsigned char>(c))) {
            on_ring(c - '0', pos);
          } else if (std::isupper(static_cast<unsigned char>(c))) {
            std::string sym(1, c);
            if (!done() && ((c == 'C' && peek() == 'l') ||
                            (c == 'B' && peek() == 'r')))
              sym += take();
            if (!organic_subset(sym)) fail("unknown element", pos);
            AtomExpr e;
            e.prim = AtomExpr::Prim::aliph_element;
            e.value = atomic_number(sym);
            on_atom(std::move(e), pos);
          } else if (std::islower(static_cast<unsigned char>(c))) {
            std::string sym(
                1, static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
            if (!aromatic_subset(sym)) fail("unknown aromatic element", pos);
            AtomExpr e;
            e.prim = AtomExpr::Prim::arom_element;
            e.value = atomic_number(sym);
            on_atom(std::move(e), pos);
          } else {
            fail("unexpected character", pos);
          }
        }
      }
    }
    if (!branch_stack.empty()) fail("unbalanced '('", text.size());
    if (!open_rings.empty()) fail("unclosed ring bond", text.size());
    if (pending_set) fail("dangling bond symbol", pending_pos);
    if (query.atoms.empty()) fail("empty pattern", 0);

    // Connectivity: embeddings of disconnected patterns are out of scope.
    std::vector<bool> reach(query.atoms.size(), false);
    std::vector<int> stack{0};
    reach[0] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& qb : query.bonds) {
        int other = qb.a == u ? qb.b : (qb.b == u ? qb.a : -1);
        if (other >= 0 && !reach[other]) {
          reach[other] = true;
          stack.push_back(other);
        }
      }
    }
    if (std::find(reach.begin(), reach.end(), false) != reach.end())
      fail("disconnected pattern", 0);
    return std::move(query);
  }
};

bool bond_matches(const Molecule& m, int bond, BondPrim prim) {
  const Bond& b = m.bonds[bond];
  switch (prim) {
    case BondPrim::def:
      return b.aromatic || b.order == 1;
    case BondPrim::single:
      return !b.aromatic && b.order == 1;
    case BondPrim::db:
      return !b.aromatic && b.order == 2;
    case BondPrim::triple:
      return !b.aromatic && b.order == 3;
    case BondPrim::arom:
      return b.aromatic;
    case BondPrim::any:
      return true;
    case BondPrim::ring:
      return m.bond_in_ring(bond);
  }
  return false;
}

}  // namespace

SmartsQuery parse_smarts(const std::string& text) {
  SmartsParser p(text);
  return p.run();
}

int SmartsQuery::count_embeddings(const Molecule& m) const {
  const std::size_t nq = atoms.size();
  if (nq > m.atom_count()) return 0;

  // Order query atoms so each one (after the first) is adjacent to an
  // earlier one; record every query bond into already-placed atoms.
  std::vector<int> order{0};
  std::vector<bool> placed(nq, false);
  placed[0] = true;
  while (order.size() < nq) {
    int next = -1;
    for (std::size_t qi = 0; qi < nq && next < 0; ++qi) {
      if (placed[qi]) continue;
      for (const auto& qb : bonds) {
        int other = qb.a == static_cast<int>(qi)
                        ? qb.b
                        : (qb.b == static_cast<int>(qi) ? qb.a : -1);
        if (other >= 0 && placed[other]) {
          next = static_cast<int>(qi);
          break;
        }
      }
    }
    order.push_back(next);  // connectivity was validated at compile time
    placed[next] = true;
  }

  std::vector<int> pos_of(nq);
  for (std::size_t k = 0; k < nq; ++k) pos_of[order[k]] = static_cast<int>(k);
  // back_bonds[k]: query bonds from order[k] to earlier-placed atoms.
  std::vector<std::vector<std::pair<int, BondPrim>>> back_bonds(nq);
  for (const auto& qb : bonds) {
    int ka = pos_of[qb.a];
    int kb = pos_of[qb.b];
    auto [lo, hi] = std::minmax(ka, kb);
    back_bonds[hi].emplace_back(lo, qb.prim);
  }

  std::set<std::vector<int>> distinct;
  std::vector<int> mapping(nq, -1);
  std::vector<bool> used(m.atom_count(), false);

  auto extend = [&](auto&& self, std::size_t k) -> void {
    if (k == nq) {
      std::vector<int> key(mapping);
      std::sort(key.begin(), key.end());
      distinct.insert(std::move(key));
      return;
    }
    const AtomExpr& qa = atoms[order[k]];
    // Candidates: neighbors of the mapped anchor (first back bond).
    const auto& anchors = back_bonds[k];
    const int anchor_atom = mapping[anchors[0].first];
    for (auto [cand, bi] : m.adjacency()[anchor_atom]) {
      (void)bi;
      if (used[cand] || !qa.eval(m, cand)) continue;
      bool ok = true;
      for (auto [earlier, prim] : anchors) {
        int mb = m.bond_between(mapping[earlier], cand);
        if (mb < 0 || !bond_matches(m, mb, prim)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      mapping[k] = cand;
      used[cand] = true;
      self(self, k + 1);
      used[cand] = false;
      mapping[k] = -1;
    }
  };

  for (std::size_t root = 0; root < m.atom_count(); ++root) {
    if (!atoms[order[0]].eval(m, static_cast<int>(root))) continue;
    mapping[0] = static_cast<int>(root);
    used[root] = true;
    extend(extend, 1);
    used[root] = false;
    mapping[0] = -1;
  }
  return static_cast<int>(distinct.size());
}

}  // namespace chembench::chem::detail
