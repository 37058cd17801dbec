//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <regex>
#include <string>
#include <vector>

#include "chembench/chem.hpp"

namespace chembench::chem::detail {

// Atom expression tree for the SMARTS subset: element / aromatic / charge /
// degree / H-count / ring-membership primitives under !, &, comma, ';'.
struct AtomExpr {
  enum class Op { prim, logical_and, logical_or, logical_not };
  enum class Prim {
    any,             // *
    arom_any,        // a
    aliph_any,       // A
    element,         // #n
    arom_element,    // c, n, ...
    aliph_element,   // C, N, ...
    charge,          // +n / -n
    degree,          // Dn
    hcount,          // Hn
    ring_membership  // R (value -1 = any), R0, Rn
  };
  Op op = Op::prim;
  Prim prim = Prim::any;
  int value = 0;
  std::vector<AtomExpr> kids;

  bool eval(const Molecule& m, int atom) const;
};

enum class BondPrim { def, single, db, triple, arom, any, ring };

struct QueryBond {
  int a = 0;
  int b = 0;
  BondPrim prim = BondPrim::def;
};

struct SmartsQuery {
  std::vector<AtomExpr> atoms;
  std::vector<QueryBond> bonds;

  int count_embeddings(const Molecule& m) const;
};

SmartsQuery parse_smarts(const std::string& text);

struct TextQuery {
  std::regex re;
};

}  // namespace chembench::chem::detail
