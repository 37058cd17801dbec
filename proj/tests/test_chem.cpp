//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "chembench/chem.hpp"
#include "chembench/errors.hpp"
#include "chembench/rng.hpp"
#include "helpers/corpus.hpp"
#include "helpers/random_smiles.hpp"

using namespace chembench;
using chem::Molecule;
using chem::Pattern;
using chem::PatternKind;

TEST_CASE("parse_smiles: ethanol basics") {
  Molecule m = chem::parse_smiles("CCO");
  CHECK(m.atom_count() == 3);
  CHECK(m.bond_count() == 2);
  for (const auto& b : m.bonds) {
    CHECK(b.order == 1);
    CHECK_FALSE(b.aromatic);
  }
  CHECK(m.atoms[2].element == "O");
  CHECK(m.atoms[2].total_h == 1);
  CHECK(m.atoms[0].total_h == 3);
  CHECK(m.atoms[1].total_h == 2);
}

TEST_CASE("parse_smiles: benzene aromatic ring") {
  Molecule m = chem::parse_smiles("c1ccccc1");
  CHECK(m.atom_count() == 6);
  CHECK(m.rings.size() == 1);
  for (const auto& a : m.atoms) {
    CHECK(a.element == "C");
    CHECK(a.aromatic);
    CHECK(a.in_ring);
    CHECK(a.total_h == 1);
  }
  for (const auto& b : m.bonds) CHECK(b.aromatic);
}

TEST_CASE("parse_smiles: kekule benzene canonicalizes like aromatic benzene") {
  CHECK(chem::canonical_smiles("C1=CC=CC=C1") ==
        chem::canonical_smiles("c1ccccc1"));
}

TEST_CASE("parse_smiles: error offsets") {
  auto offset_of = [](const std::string& s) -> std::size_t {
    try {
      chem::parse_smiles(s);
    } catch (const ParseError& e) {
      return e.offset;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("C1CC") == 1);        // unclosed ring
  CHECK(offset_of("C(C") == 1);         // unbalanced branch
  CHECK(offset_of("CC)C") == 2);        // unbalanced ')'
  CHECK(offset_of("C[Xx]") == 2);       // unknown element
  CHECK(offset_of("C(=O)(=O)(=O)=O") == 0);  // valence violation on atom 0
  CHECK_THROWS_AS(chem::parse_smiles(""), ParseError);
  CHECK_THROWS_AS(chem::parse_smiles("cc"), ParseError);  // aromatic outside ring
  CHECK_THROWS_AS(chem::parse_smiles("C=1CC=2"), ParseError);
}

TEST_CASE("parse_smiles: bracket atoms, charges, isotopes") {
  Molecule m = chem::parse_smiles("[NH4+]");
  CHECK(m.atom_count() == 1);
  CHECK(m.atoms[0].charge == 1);
  CHECK(m.atoms[0].total_h == 4);

  Molecule iso = chem::parse_smiles("[13CH4]");
  CHECK(iso.atoms[0].isotope == 13);

  Molecule neg = chem::parse_smiles("CC(=O)[O-]");
  CHECK(neg.atoms[3].charge == -1);
  CHECK(neg.atoms[3].total_h == 0);
}

TEST_CASE("parse_smiles: stereo tokens accepted and discarded") {
  Molecule m = chem::parse_smiles("C/C=C\\C");
  CHECK(m.atom_count() == 4);
  CHECK(chem::canonical_smiles(m) == chem::canonical_smiles("CC=CC"));
  CHECK(chem::canonical_smiles("[C@H](N)(C)O") ==
        chem::canonical_smiles("[CH](N)(C)O"));
}

TEST_CASE("canonical_smiles: reordered input yields one string") {
  CHECK(chem::canonical_smiles("CCO") == chem::canonical_smiles("OCC"));
  CHECK(chem::canonical_smiles("c1ccc(cc1)N") ==
        chem::canonical_smiles("Nc1ccccc1"));
}

TEST_CASE("canonical_smiles: fixed point over the corpus") {
  for (const auto& smi : testing::load_corpus()) {
    CAPTURE(smi);
    std::string c1 = chem::canonical_smiles(smi);
    std::string c2 = chem::canonical_smiles(c1);
    CHECK(c1 == c2);
  }
}

TEST_CASE("canonical_smiles: permutation invariance on a 20-atom molecule") {
  const std::string smi = "CC(C)Cc1ccc(cc1)C(C)C(=O)O";  // 15 heavy + ...
  Molecule m = chem::parse_smiles(smi);
  const std::string expect = chem::canonical_smiles(m);
  Rng rng(20260809);
  for (int i = 0; i < 50; ++i) {
    std::string shuffled = testing::random_smiles(m, rng);
    CAPTURE(shuffled);
    CHECK(chem::canonical_smiles(shuffled) == expect);
  }
}

TEST_CASE("parse/emit round-trip preserves counts, charges, aromatic flags") {
  for (const auto& smi : testing::load_corpus()) {
    CAPTURE(smi);
    Molecule a = chem::parse_smiles(smi);
    Molecule b = chem::parse_smiles(chem::canonical_smiles(a));
    CHECK(a.atom_count() == b.atom_count());
    CHECK(a.bond_count() == b.bond_count());
    auto charge_multiset = [](const Molecule& m) {
      std::multiset<int> s;
      for (const auto& at : m.atoms) s.insert(at.charge);
      return s;
    };
    auto aromatic_multiset = [](const Molecule& m) {
      std::multiset<bool> s;
      for (const auto& at : m.atoms) s.insert(at.aromatic);
      return s;
    };
    auto h_multiset = [](const Molecule& m) {
      std::multiset<int> s;
      for (const auto& at : m.atoms) s.insert(at.total_h);
      return s;
    };
    CHECK(charge_multiset(a) == charge_multiset(b));
    CHECK(aromatic_multiset(a) == aromatic_multiset(b));
    CHECK(h_multiset(a) == h_multiset(b));
  }
}

TEST_CASE("match_pattern: benzene self-match") {
  Molecule benzene = chem::parse_smiles("c1ccccc1");
  Pattern p = Pattern::compile(PatternKind::substructure, "c1ccccc1");
  CHECK(p.match_count(benzene) >= 1);
}

TEST_CASE("match_pattern: nitro group") {
  Pattern nitro = Pattern::compile(PatternKind::substructure, "[N+](=O)[O-]");
  CHECK(nitro.match_count(chem::parse_smiles("CCO")) == 0);
  // Nitrobenzene: the two oxygens are distinguishable (charge, bond order),
  // so exactly one embedding up to the matched atom set.
  CHECK(nitro.match_count(chem::parse_smiles("O=[N+]([O-])c1ccccc1")) == 1);
  // Dinitro: two distinct sites.
  CHECK(nitro.match_count(chem::parse_smiles(
            "O=[N+]([O-])c1ccc(cc1)[N+](=O)[O-]")) == 2);
}

TEST_CASE("match_pattern: embedding count modulo pattern symmetry") {
  Molecule benzene = chem::parse_smiles("c1ccccc1");
  // All 12 raw embeddings of the ring map onto one atom set.
  Pattern ring = Pattern::compile(PatternKind::substructure, "c1ccccc1");
  CHECK(ring.match_count(benzene) == 1);
  // Single aromatic carbon: six distinct atoms.
  Pattern one = Pattern::compile(PatternKind::substructure, "c");
  CHECK(one.match_count(benzene) == 6);
}

TEST_CASE("match_pattern: smarts primitives") {
  Molecule m = chem::parse_smiles("CC(=O)Nc1ccc(O)cc1");  // paracetamol
  auto count = [&](const std::string& s) {
    return Pattern::compile(PatternKind::substructure, s).match_count(m);
  };
  CHECK(count("[OH]") == 1);          // phenol OH
  CHECK(count("O=C") == 1);           // carbonyl
  CHECK(count("[NH]") == 1);          // amide NH
  CHECK(count("a") == 6);             // aromatic atoms
  CHECK(count("[R]") == 6);           // ring atoms
  CHECK(count("[!R]") == 5);          // acyclic heavy atoms
  CHECK(count("[#8]") == 2);          // any oxygen
  CHECK(count("[cD3]") == 2);         // substituted aromatic carbons
  CHECK(count("[N,O]") == 3);
  CHECK(count("C~O") == 1);           // aliphatic C to O: the carbonyl only
  CHECK(count("[#6]~[#8]") == 2);     // plus the phenol c-O
  CHECK(count("c:c") == 6);           // aromatic bonds in the ring
  CHECK(count("[C;!R]") == 2);        // aliphatic carbons, acyclic
}

TEST_CASE("match_pattern: ring-bond and charge primitives") {
  Molecule glycine = chem::parse_smiles("[NH3+]CC(=O)[O-]");
  auto count = [&](const std::string& s) {
    return Pattern::compile(PatternKind::substructure, s).match_count(glycine);
  };
  CHECK(count("[+]") == 1);
  CHECK(count("[-]") == 1);
  CHECK(count("[N+H3]") == 1);
  Molecule decalin = chem::parse_smiles("C1CCC2CCCCC2C1");
  Pattern ringbond = Pattern::compile(PatternKind::substructure, "C@C");
  CHECK(ringbond.match_count(decalin) == 11);  // 11 ring bonds
}

TEST_CASE("match_pattern: text patterns run against canonical smiles") {
  Molecule m = chem::parse_smiles("O=[N+]([O-])c1ccccc1");
  Pattern txt = Pattern::compile(PatternKind::text, "\\[N\\+\\]");
  CHECK(txt.match_count(m) == 1);
  Pattern aromatic_c = Pattern::compile(PatternKind::text, "c");
  CHECK(aromatic_c.match_count(m) == 6);
}

TEST_CASE("pattern compile errors are rejected at load time") {
  CHECK_THROWS_AS(Pattern::compile(PatternKind::substructure, "C(("),
                  ParseError);
  CHECK_THROWS_AS(Pattern::compile(PatternKind::substructure, "[Qq]"),
                  ParseError);
  CHECK_THROWS_AS(Pattern::compile(PatternKind::text, "(["), ParseError);
  CHECK_THROWS_AS(Pattern::compile(PatternKind::substructure, ""), ParseError);
}

TEST_CASE("match count invariant under atom permutation") {
  Pattern nitro = Pattern::compile(PatternKind::substructure, "[N+](=O)[O-]");
  Molecule m = chem::parse_smiles("Cc1ccc(cc1)[N+](=O)[O-]");
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    Molecule p = chem::parse_smiles(testing::random_smiles(m, rng));
    CHECK(nitro.match_count(p) == nitro.match_count(m));
  }
}

TEST_CASE("multi-fragment SMILES canonicalize deterministically") {
  CHECK(chem::canonical_smiles("[Na+].[Cl-]") ==
        chem::canonical_smiles("[Cl-].[Na+]"));
}
