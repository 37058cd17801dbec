//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <set>
#include <vector>

#include "chembench/errors.hpp"
#include "chembench/featurize.hpp"
#include "chembench/rng.hpp"

namespace chembench::featurize {

bool BitFingerprint::test(std::uint32_t index) const {
  return std::binary_search(bits.begin(), bits.end(), index);
}

namespace {

std::uint64_t hash_sequence(std::uint64_t seed,
                            const std::vector<std::uint64_t>& items) {
  std::uint64_t h = seed;
  for (auto v : items) h = hash_mix(h, v);
  return h;
}

int bond_code(const chem::Bond& b) { return b.aromatic ? 4 : b.order; }

}  // namespace

BitFingerprint ecfp(const chem::Molecule& m, int radius, int nbits) {
  if (radius < 0 || nbits <= 0) throw ShapeError("bad ecfp parameters");
  const std::size_t n = m.atom_count();

  // Initial atom identifiers: element, degree, H count, charge, ring flag,
  // aromatic flag.
  std::vector<std::uint64_t> ids(n);
  for (std::size_t a = 0; a < n; ++a) {
    const chem::Atom& at = m.atoms[a];
    ids[a] = hash_sequence(
        0x9d3fe5a2c17b4e01ULL,
        {static_cast<std::uint64_t>(chem::atomic_number(at.element)),
         static_cast<std::uint64_t>(m.degree(static_cast<int>(a))),
         static_cast<std::uint64_t>(at.total_h),
         static_cast<std::uint64_t>(at.charge + 16),
         static_cast<std::uint64_t>(at.in_ring ? 1 : 0),
         static_cast<std::uint64_t>(at.aromatic ? 1 : 0)});
  }

  // Environment atom sets per center, grown one bond per iteration;
  // duplicates are removed by (identifier, atom set).
  std::vector<std::vector<int>> env(n);
  for (std::size_t a = 0; a < n; ++a) env[a] = {static_cast<int>(a)};

  std::set<std::pair<std::uint64_t, std::vector<int>>> features;
  for (std::size_t a = 0; a < n; ++a) features.insert({ids[a], env[a]});

  for (int r = 1; r <= radius; ++r) {
    std::vector<std::uint64_t> next_ids(n);
    std::vector<std::vector<int>> next_env(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::set<int> grown(env[a].begin(), env[a].end());
      for (auto [nb, bi] : m.adjacency()[a]) {
        (void)bi;
        grown.insert(env[nb].begin(), env[nb].end());
      }
      next_env[a].assign(grown.begin(), grown.end());

      // Identifier freezes once the environment stops growing, so a fully
      // covered neighborhood contributes a single feature no matter how
      // large the radius (duplicates then collapse via the feature set).
      if (next_env[a] == env[a]) {
        next_ids[a] = ids[a];
        continue;
      }
      std::vector<std::pair<int, std::uint64_t>> nbrs;
      for (auto [nb, bi] : m.adjacency()[a])
        nbrs.emplace_back(bond_code(m.bonds[bi]), ids[nb]);
      std::sort(nbrs.begin(), nbrs.end());
      std::vector<std::uint64_t> items{ids[a]};
      for (auto [code, id] : nbrs) {
        items.push_back(static_cast<std::uint64_t>(code));
        items.push_back(id);
      }
      next_ids[a] = hash_sequence(0xc42b1e7d93a65f10ULL, items);
    }
    ids = std::move(next_ids);
    env = std::move(next_env);
    for (std::size_t a = 0; a < n; ++a) features.insert({ids[a], env[a]});
  }

  BitFingerprint fp;
  fp.length = nbits;
  fp.tag = radius == 3 ? "ecfp-r3" : (radius == 2 ? "ecfp-r2" : "ecfp-r" + std::to_string(radius));
  std::set<std::uint32_t> folded;
  for (const auto& [id, atoms] : features) {
    (void)atoms;
    folded.insert(static_cast<std::uint32_t>(id % static_cast<std::uint64_t>(nbits)));
  }
  fp.bits.assign(folded.begin(), folded.end());
  return fp;
}

double tanimoto(const BitFingerprint& a, const BitFingerprint& b) {
  if (a.length != b.length || a.tag != b.tag)
    throw MismatchError("fingerprint length/tag mismatch: " + a.tag + " vs " +
                        b.tag);
  if (a.bits.empty() && b.bits.empty()) return 1.0;
  std::size_t i = 0, j = 0, both = 0;
  while (i < a.bits.size() && j < b.bits.size()) {
    if (a.bits[i] == b.bits[j]) {
      ++both;
      ++i;
      ++j;
    } else if (a.bits[i] < b.bits[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  const double unions =
      static_cast<double>(a.bits.size() + b.bits.size() - both);
  return static_cast<double>(both) / unions;
}

int DescriptorVector::slot_of(const std::string& name) {
  for (int i = 0; i < kDescriptorCount; ++i) {
    if (name == kDescriptorNames[i]) return i;
  }
  return -1;
}

}  // namespace chembench::featurize
