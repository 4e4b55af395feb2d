#pragma once

/*
 * Closed-form classification of the central extensions of so_{w}(N+1).
 *
 * Every two-cocycle is determined by a small set of "basic" coefficients,
 * one per family below; all other cochain entries are fixed multiples of
 * them (see symbolic_entry). Writing alpha_{ab,cd} for the value on the
 * generator pair (Omega_ab, Omega_cd):
 *
 *   type I    tau_ac      := alpha_{a a+1, a+1 c}   (c >= a+2)
 *   type IIF  alphaF_p    := alpha_{p-1 p, p-1 p+1} (p = 1..N-1)
 *   type IIL  alphaL_p    := alpha_{p p+2, p+1 p+2} (p = 0..N-2)
 *   type III  beta_uv     := alpha_{u-1 u, v-1 v}   (1 <= u, u+2 <= v <= N)
 *
 * The type II pairs attached to the same consecutive generator Omega_{p,p+1}
 * obey  w_{p+2} alphaF_p = w_p alphaL_p  (p = 1..N-2), and each beta must be
 * annihilated by a short list of omega products; conditions that would
 * reference w_0 or w_{N+1} simply do not exist. Type I coefficients are
 * always coboundaries. The surviving nontrivial generators and the closed
 * dimension count are computed by classify_nontrivial / h2_dimension_formula
 * along two independent code paths (explicit range checks vs. padded zero
 * indicators) that the tests pin against each other and against the
 * brute-force oracle.
 */

#include "ck/algebra.hpp"
#include "ck/cohomology.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ck {

enum class CoefKind { TypeI_tau, TypeIIF, TypeIIL, TypeIII_beta };

struct BasicCoefficient {
  CoefKind kind = CoefKind::TypeI_tau;
  int i = 0; // tau: a, alphaF/alphaL: position p, beta: u
  int j = 0; // tau: c, alphaF/alphaL: p+1,        beta: v

  auto operator<=>(const BasicCoefficient&) const = default;

  // "tau_{02}", "alpha^F_{12}", "alpha^L_{01}", "beta_{13}"; the unicode
  // variant swaps in the greek letters.
  std::string name(bool unicode = false) const;
};

BasicCoefficient tau(int a, int c);
BasicCoefficient alpha_f(int p); // alpha^F_{p,p+1}
BasicCoefficient alpha_l(int p); // alpha^L_{p,p+1}
BasicCoefficient beta(int u, int v);

// Zero-pattern indicators: query(i) is 1 when w_i = 0, and by convention 1
// for every index outside 1..N (absent parameters count as contracted).
class DeltaSequence {
public:
  explicit DeltaSequence(std::vector<int> deltas);
  int query(int i) const;
  int n() const { return static_cast<int>(deltas_.size()); }

private:
  std::vector<int> deltas_;
};

DeltaSequence delta_sequence(const OmegaSequence& seq);

// Values for the basic coefficients; unset reads as zero. May carry any of
// the four kinds (type I values ride along for bookkeeping only).
class ExtensionAssignment {
public:
  Rational at(const BasicCoefficient& c) const;
  void set(const BasicCoefficient& c, const Rational& v);
  const std::map<BasicCoefficient, Rational>& values() const {
    return values_;
  }

  bool operator==(const ExtensionAssignment&) const = default;

private:
  std::map<BasicCoefficient, Rational> values_;
};

// All basic coefficients for rank N: N(N-1)/2 taus, N-1 of each type II
// family, (N-1)(N-2)/2 betas (none for N=2).
std::vector<BasicCoefficient> enumerate_basic(int N);

// Closed dimension count for H^2, evaluated from padded delta indicators.
int h2_dimension_formula(const OmegaSequence& seq);

// The nontrivial cohomology generators, in a fixed order: alphaL_0, the
// interior (alphaF_p, alphaL_p) pairs by position, alphaF_{N-1}, then betas
// lexicographically. Type I never appears. The list length always equals
// h2_dimension_formula(seq).
std::vector<BasicCoefficient> classify_nontrivial(const OmegaSequence& seq);

// Human-readable descriptions of every violated compatibility condition;
// empty means the assignment extends the algebra consistently.
std::vector<std::string> constraint_check(const OmegaSequence& seq,
                                          const ExtensionAssignment& assign);

// Structural content of the cochain entry at (Omega_P, Omega_Q), P < Q:
// which basic coefficient appears there and with which rational multiplier.
// nullopt means that entry is identically zero.
std::optional<std::pair<Rational, BasicCoefficient>>
symbolic_entry(const OmegaSequence& seq, GeneratorPair P, GeneratorPair Q);

// Full two-cochain spanned by an assignment. Type I values are read from
// `taus` (keyed by (a,c)) merged over any type I entries in `assign`.
// Requires constraint_check to pass.
TwoCochain derive_full_cochain(
    const OmegaSequence& seq, const ExtensionAssignment& assign,
    const std::map<std::pair<int, int>, Rational>& taus = {});

// Test hook: same expansion without the constraint validation, used to
// demonstrate that invalid assignments really do break the Jacobi identity.
TwoCochain derive_cochain_unchecked(
    const OmegaSequence& seq, const ExtensionAssignment& assign,
    const std::map<std::pair<int, int>, Rational>& taus = {});

struct ConsistencyResult {
  int formula = 0;
  int oracle = 0;
  bool agree = false;
};

// Cross-validation harness: closed formula vs. brute-force oracle.
ConsistencyResult is_formula_consistent(const OmegaSequence& seq);

} // namespace ck
