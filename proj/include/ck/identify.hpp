#pragma once

#include "ck/algebra.hpp"

#include <optional>
#include <string>

namespace ck {

// Family name for a sequence whose zero pattern the registry recognizes,
// plus a colloquial alias when one exists ("Euclidean", "2+1 Galilei", ...).
// This is a finite pattern registry, not an isomorphism classifier: many
// sequences generate isomorphic algebras under reversal or sign play, and
// those simply report their own pattern's name or nothing at all.
struct AlgebraName {
  std::string name;
  std::string alias; // empty when there is none
};

// Requires a standardized sequence (entries in {-1,0,1}); throws otherwise.
std::optional<AlgebraName> identify_name(const OmegaSequence& seq);

// Just the canonical name, e.g. "iso(3,1)", "ii'so(3)", "flag iiiso(1)".
std::optional<std::string> identify(const OmegaSequence& seq);

// "iiso(2) (2+1 Galilei)" or "" when the pattern is not in the registry.
std::string display_name(const OmegaSequence& seq);

} // namespace ck
