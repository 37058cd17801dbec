//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cmath>
#include <vector>

#include "chembench/featurize.hpp"

namespace chembench::featurize {

namespace {

using chem::Atom;
using chem::Molecule;

struct BondProfile {
  int deg = 0;       // heavy neighbors
  int singles = 0;   // non-aromatic single bonds
  int doubles = 0;
  int triples = 0;
  int aromatic = 0;
  bool double_to_hetero = false;
};

BondProfile profile(const Molecule& m, int a) {
  BondProfile p;
  for (auto [nb, bi] : m.adjacency()[a]) {
    const auto& b = m.bonds[bi];
    ++p.deg;
    if (b.aromatic) {
      ++p.aromatic;
    } else if (b.order == 1) {
      ++p.singles;
    } else if (b.order == 2) {
      ++p.doubles;
      if (m.atoms[nb].element != "C") p.double_to_hetero = true;
    } else {
      ++p.triples;
    }
  }
  return p;
}

bool in_three_ring(const Molecule& m, int a) {
  for (const auto& ring : m.rings) {
    if (ring.size() == 3 &&
        std::find(ring.begin(), ring.end(), a) != ring.end())
      return true;
  }
  return false;
}

// Ertl fragment contributions, N/O terms only.
double tpsa_contrib(const Molecule& m, int a) {
  const Atom& at = m.atoms[a];
  const BondProfile p = profile(m, a);
  const int h = at.total_h;

  if (at.element == "N") {
    if (at.aromatic) {
      if (at.charge == 0) {
        if (h == 0 && p.deg == 2 && p.aromatic == 2) return 12.89;
        if (h == 0 && p.deg == 3 && p.aromatic == 3) return 4.41;
        if (h == 0 && p.deg == 3 && p.aromatic == 2 && p.singles == 1)
          return 4.93;
        if (h == 0 && p.deg == 3 && p.aromatic == 2 && p.doubles == 1)
          return 8.39;
        if (h == 1 && p.deg == 2 && p.aromatic == 2) return 15.79;
      } else if (at.charge == 1) {
        if (h == 0 && p.deg == 3 && p.aromatic == 3) return 4.10;
        if (h == 0 && p.deg == 3 && p.aromatic == 2 && p.singles == 1)
          return 3.88;
        if (h == 1 && p.deg == 2 && p.aromatic == 2) return 14.14;
      }
    } else if (at.charge == 0) {
      if (h == 0) {
        if (p.deg == 3 && p.singles == 3)
          return in_three_ring(m, a) ? 3.01 : 3.24;
        if (p.deg == 2 && p.singles == 1 && p.doubles == 1) return 12.36;
        if (p.deg == 1 && p.triples == 1) return 23.79;
        if (p.deg == 3 && p.singles == 1 && p.doubles == 2) return 11.68;
        if (p.deg == 2 && p.doubles == 1 && p.triples == 1) return 13.60;
      } else if (h == 1) {
        if (p.deg == 2 && p.singles == 2)
          return in_three_ring(m, a) ? 21.94 : 12.03;
        if (p.deg == 1 && p.doubles == 1) return 23.85;
      } else if (h == 2 && p.deg == 1 && p.singles == 1) {
        return 26.02;
      }
    } else if (at.charge == 1) {
      if (h == 0) {
        if (p.deg == 4 && p.singles == 4) return 0.00;
        if (p.deg == 3 && p.singles == 2 && p.doubles == 1) return 3.01;
        if (p.deg == 2 && p.singles == 1 && p.triples == 1) return 4.36;
      } else if (h == 1) {
        if (p.deg == 3 && p.singles == 3) return 4.44;
        if (p.deg == 2 && p.singles == 1 && p.doubles == 1) return 13.97;
      } else if (h == 2) {
        if (p.deg == 2 && p.singles == 2) return 16.61;
        if (p.deg == 1 && p.doubles == 1) return 25.59;
      } else if (h == 3 && p.deg == 1 && p.singles == 1) {
        return 27.64;
      }
    }
    return std::max(0.0, 30.5 - 8.2 * (p.deg + h) + 1.5 * h);
  }

  if (at.element == "O") {
    if (at.aromatic) return 13.14;
    if (at.charge == 0) {
      if (h == 0 && p.deg == 2 && p.singles == 2)
        return in_three_ring(m, a) ? 12.53 : 9.23;
      if (h == 0 && p.deg == 1 && p.doubles == 1) return 17.07;
      if (h == 1 && p.deg == 1 && p.singles == 1) return 20.23;
    } else if (at.charge == -1 && h == 0 && p.deg == 1 && p.singles == 1) {
      return 23.06;
    }
    return std::max(0.0, 28.5 - 8.6 * (p.deg + h) + 1.5 * h);
  }

  return 0.0;
}

struct Contribution {
  double logp;
  double mr;
};

// Reduced Wildman-Crippen atom typing: the published values for the types
// below; atoms outside the implemented typing fall back to the published
// per-element wildcard contribution (docs/descriptors.md lists the scope).
Contribution crippen_contrib(const Molecule& m, int a) {
  const Atom& at = m.atoms[a];
  const BondProfile p = profile(m, a);

  if (at.element == "C") {
    if (at.aromatic) {
      if (at.total_h >= 1) return {0.1581, 3.350};  // C18 [cH]
      return {0.08129, 3.243};                       // CS fallback
    }
    if (p.triples > 0) return {0.0017, 3.888};       // C7
    if (p.doubles > 0) {
      if (p.double_to_hetero) return {-0.2783, 5.007};  // C5
      return {0.1551, 3.513};                           // C6
    }
    for (auto [nb, bi] : m.adjacency()[a]) {
      (void)bi;
      if (m.atoms[nb].element != "C") return {-0.2035, 2.753};  // C3
    }
    return {0.1441, 2.503};  // C1
  }
  if (at.element == "N") {
    if (at.aromatic) return {-0.3239, 2.202};                   // N11
    if (at.charge == 0 && at.total_h == 2 && p.deg == 1)
      return {-1.0190, 2.262};                                  // N1
    if (at.charge == 0 && at.total_h == 1 && p.deg == 2 &&
        p.singles == 2)
      return {-0.7096, 2.173};                                  // N2
    return {-0.4806, 2.134};                                    // NS
  }
  if (at.element == "O") {
    if (at.aromatic) return {0.1552, 1.080};                    // O1
    if (at.charge == 0 && at.total_h == 1 && p.deg == 1)
      return {-0.2893, 0.8238};                                 // O2
    if (at.charge == 0 && at.total_h == 0 && p.deg == 2 &&
        p.singles == 2)
      return {-0.0684, 1.085};                                  // O3
    return {-0.1188, 0.6865};                                   // OS
  }
  if (at.element == "S") return {0.6482, 7.591};
  if (at.element == "P") return {0.8612, 6.920};
  if (at.element == "F") return {0.4202, 1.108};
  if (at.element == "Cl") return {0.6895, 5.853};
  if (at.element == "Br") return {0.8456, 8.927};
  if (at.element == "I") return {0.8857, 14.02};
  return {0.0, 0.0};
}

Contribution hydrogen_contrib(const Atom& host) {
  if (host.element == "C") return {0.1230, 1.057};  // H1
  if (host.element == "N" || host.element == "O")
    return {-0.2677, 1.395};  // H2
  return {0.1125, 1.112};     // HS
}

}  // namespace

DescriptorVector descriptor_panel(const Molecule& m) {
  DescriptorVector d;
  auto& v = d.values;

  double mw = 0.0;
  int hbd = 0, hba = 0, halogens = 0, nc = 0, oc = 0, sc = 0;
  int carbons = 0, sp3_carbons = 0;
  int net_charge = 0;
  double tpsa = 0.0, logp = 0.0, mr = 0.0;

  for (std::size_t a = 0; a < m.atom_count(); ++a) {
    const Atom& at = m.atoms[a];
    mw += at.isotope > 0 ? at.isotope : chem::atomic_mass(at.element);
    mw += at.total_h * 1.008;
    net_charge += at.charge;
    if (at.element == "N" || at.element == "O") {
      ++hba;
      if (at.total_h >= 1) ++hbd;
    }
    if (at.element == "F" || at.element == "Cl" || at.element == "Br" ||
        at.element == "I")
      ++halogens;
    if (at.element == "N") ++nc;
    if (at.element == "O") ++oc;
    if (at.element == "S") ++sc;
    if (at.element == "C") {
      ++carbons;
      const BondProfile p = profile(m, static_cast<int>(a));
      if (!at.aromatic && p.doubles == 0 && p.triples == 0) ++sp3_carbons;
    }
    tpsa += tpsa_contrib(m, static_cast<int>(a));
    Contribution c = crippen_contrib(m, static_cast<int>(a));
    Contribution hc = hydrogen_contrib(at);
    logp += c.logp + at.total_h * hc.logp;
    mr += c.mr + at.total_h * hc.mr;
  }

  int aromatic_rings = 0;
  for (const auto& ring : m.rings) {
    bool all = true;
    for (int at : ring) all = all && m.atoms[at].aromatic;
    aromatic_rings += all ? 1 : 0;
  }

  int rot = 0;
  for (const auto& b : m.bonds) {
    if (b.order != 1 || b.aromatic) continue;
    if (m.bond_in_ring(m.bond_between(b.a, b.b))) continue;
    if (m.degree(b.a) >= 2 && m.degree(b.b) >= 2) ++rot;
  }

  v[0] = mw;
  v[1] = static_cast<double>(m.atom_count());
  v[2] = static_cast<double>(m.rings.size());
  v[3] = aromatic_rings;
  v[4] = hbd;
  v[5] = hba;
  v[6] = rot;
  v[7] = tpsa;
  v[8] = logp;
  v[9] = mr;
  v[10] = carbons == 0 ? 0.0 : static_cast<double>(sp3_carbons) / carbons;
  v[11] = halogens;
  v[12] = nc;
  v[13] = oc;
  v[14] = sc;
  v[15] = net_charge;
  return d;
}

}  // namespace chembench::featurize
