//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chembench/chem.hpp"

namespace chembench::featurize {

struct BitFingerprint {
  int length = 0;
  std::vector<std::uint32_t> bits;  // sorted, unique set-bit indices
  std::string tag;                  // ecfp-r2 | ecfp-r3 | keys-166

  int popcount() const { return static_cast<int>(bits.size()); }
  bool test(std::uint32_t index) const;
};

/// Folded circular fingerprint; radius 2 = ECFP4, radius 3 = ECFP6.
BitFingerprint ecfp(const chem::Molecule& m, int radius, int nbits = 2048);

/// |a AND b| / |a OR b|; 1.0 when both fingerprints are empty.
/// Throws MismatchError on length or generator-tag mismatch.
double tanimoto(const BitFingerprint& a, const BitFingerprint& b);

// -- structural keys ------------------------------------------------------

struct KeyDef {
  int index;            // 0-based bit position
  std::string pattern;  // SMARTS-subset source; empty = permanently 0
  int min_count = 1;    // bit set iff match count >= min_count
  std::string note;
};

/// The 166 key definitions backing structural_keys (public 166-key set,
/// restricted to the supported SMARTS subset; unsupported keys are
/// permanently zero with the reason recorded in the note).
const std::vector<KeyDef>& key_definitions();

BitFingerprint structural_keys(const chem::Molecule& m);

// -- descriptor panel -----------------------------------------------------

inline constexpr int kDescriptorCount = 16;

inline constexpr std::array<const char*, kDescriptorCount> kDescriptorNames{
    "mw",        "heavy_atoms", "ring_count", "aromatic_rings",
    "hbd",       "hba",         "rot_bonds",  "tpsa",
    "logp",      "mr",          "fsp3",       "halogens",
    "n_count",   "o_count",     "s_count",    "net_charge"};

struct DescriptorVector {
  std::array<double, kDescriptorCount> values{};

  double operator[](int slot) const { return values[slot]; }
  static int slot_of(const std::string& name);  // -1 if unknown
};

DescriptorVector descriptor_panel(const chem::Molecule& m);

}  // namespace chembench::featurize
