#pragma once

/*
 * Centrally extended algebras: the base algebra plus one generator Xi
 * commuting with everything, with [Omega_P, Omega_Q] picking up the
 * central term alpha(P,Q) Xi. Also the generator redefinitions
 * Omega -> Omega + mu Xi that strip the trivial part of an extension,
 * the group-level compactness filter on type III coefficients, and
 * plain-text commutator tables.
 */

#include "ck/algebra.hpp"
#include "ck/closed_form.hpp"
#include "ck/cohomology.hpp"

#include <string>
#include <vector>

namespace ck {

// Base algebra plus the central generator, appended as the last flat index.
struct ExtendedAlgebra {
  OmegaSequence base;
  TwoCochain cochain;   // central charges over the base generator pairs
  StructureTable table; // pair_count(N) + 1 generators

  int center_index() const { return table.n_gens - 1; }
};

// Builds the extension determined by an assignment of basic coefficients.
// Throws std::invalid_argument when the assignment violates the closure
// constraints (such a table would fail the Jacobi identity).
ExtendedAlgebra extend(const OmegaSequence& seq,
                       const ExtensionAssignment& assign);

// Same table construction from a raw cochain, no validity check. A
// non-cocycle input yields a table that fails check_jacobi.
ExtendedAlgebra extend_unchecked(const OmegaSequence& seq,
                                 const TwoCochain& cochain);

struct TrivializeResult {
  ExtensionAssignment reduced; // support within classify_nontrivial(seq)
  OneCochain shifts;           // mu of the redefinition Omega -> Omega + mu Xi
};

// Strips the trivial part of an assignment. Type I values are absorbed by
// shifting the non-consecutive generators; each type II value divisible by
// a nonzero omega is absorbed by shifting the consecutive generator it
// sits on. The cochains of assign and reduced differ by the coboundary of
// shifts. Throws on constraint violations.
TrivializeResult trivialize(const OmegaSequence& seq,
                            const ExtensionAssignment& assign);

// Drops every beta_uv whose bracket partners Omega_{u-1,u}, Omega_{v-1,v}
// generate a compact rotation (w_u > 0 or w_v > 0): such a cocycle is
// nontrivial on the algebra but integrates to a trivial extension of the
// (simply connected) group. Type II coefficients pass through. Requires a
// standardized sequence.
std::vector<BasicCoefficient> group_compactness_filter(
    const OmegaSequence& seq, const std::vector<BasicCoefficient>& nontrivial);

struct RenderOptions {
  bool unicode = false; // Greek glyphs instead of "omega", "alpha^F", ...
};

struct CommutatorTable {
  std::vector<std::string> rows;

  std::string to_text() const; // newline-joined rows
};

// Rows follow the index-triple layout: for each triple a<b<c the brackets
// [ab,ac], [ab,bc], [ac,bc], then the pairs with four distinct indices.
// Numeric listing of the nonzero brackets of an extended algebra.
CommutatorTable commutator_table(const ExtendedAlgebra& ext,
                                 RenderOptions opts = {});

// Every pair bracket of the general extension whose central charges range
// over the given coefficients (kept symbolic), plus the closing row for
// the central generator. Zero brackets are listed too.
CommutatorTable generic_commutator_table(
    const OmegaSequence& seq, const std::vector<BasicCoefficient>& coefficients,
    RenderOptions opts = {});

} // namespace ck
