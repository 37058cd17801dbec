//
// Project chembench - Copyright 2026 the chembench authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <regex>

#include "chembench/chem.hpp"
#include "chembench/errors.hpp"
#include "smarts.hpp"

namespace chembench::chem {

Pattern Pattern::compile(PatternKind kind, const std::string& source) {
  Pattern p;
  p.kind_ = kind;
  p.source_ = source;
  if (source.empty()) throw ParseError("empty pattern", 0);
  if (kind == PatternKind::substructure) {
    p.smarts_ = std::make_shared<const detail::SmartsQuery>(
        detail::parse_smarts(source));
  } else {
    try {
      auto q = std::make_shared<detail::TextQuery>();
      q->re = std::regex(source, std::regex::ECMAScript);
      p.text_ = std::move(q);
    } catch (const std::regex_error& e) {
      throw ParseError(std::string("bad text pattern: ") + e.what(), 0);
    }
  }
  return p;
}

int Pattern::match_count(const Molecule& m) const {
  if (kind_ == PatternKind::substructure) return smarts_->count_embeddings(m);
  return match_count(m, canonical_smiles(m));
}

int Pattern::match_count(const Molecule& m, const std::string& canonical) const {
  if (kind_ == PatternKind::substructure) return smarts_->count_embeddings(m);
  int count = 0;
  auto begin = std::sregex_iterator(canonical.begin(), canonical.end(), text_->re);
  for (auto it = begin; it != std::sregex_iterator(); ++it) ++count;
  return count;
}

}  // namespace chembench::chem
