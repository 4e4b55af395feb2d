#pragma once

/*
 * Quasi-orthogonal Cayley-Klein algebras so_{w1,...,wN}(N+1).
 *
 * The algebra is spanned by generators Omega_ab indexed by ordered pairs
 * 0 <= a < b <= N. With the products
 *
 *     w_ab := w_{a+1} * w_{a+2} * ... * w_b     (w_aa := 1)
 *
 * the nonzero brackets are, for a < b < c,
 *
 *     [Omega_ab, Omega_ac] =  w_ab Omega_bc
 *     [Omega_ab, Omega_bc] =       -Omega_ac
 *     [Omega_ac, Omega_bc] =  w_bc Omega_ab
 *
 * and brackets of pairs with four distinct indices vanish. Setting every
 * w_i = 1 gives so(N+1); sign patterns give the pseudo-orthogonal algebras;
 * zeros give inhomogeneous (contracted) algebras, down to the "flag"
 * algebra when every w_i = 0.
 */

#include "ck/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ck {

// Index pair (a,b), a < b, labelling the generator Omega_ab.
struct GeneratorPair {
  int a = 0;
  int b = 1;

  GeneratorPair() = default;
  GeneratorPair(int a_, int b_); // rejects a >= b or a < 0

  auto operator<=>(const GeneratorPair&) const = default;

  // "01", "27"; indices >= 10 are comma-separated: "3,12".
  std::string label() const;
};

// The contraction parameters w_1..w_N. Immutable once built.
class OmegaSequence {
public:
  explicit OmegaSequence(std::vector<Rational> omegas); // requires N >= 2

  // Comma-separated rationals: "0,-1,1/2". Rejects bad tokens and N < 2.
  static std::optional<OmegaSequence> parse(const std::string& csv);

  int n() const { return static_cast<int>(omegas_.size()); }
  const Rational& omega(int i) const; // 1-based, 1 <= i <= N
  const std::vector<Rational>& omegas() const { return omegas_; }

  bool is_standardized() const;    // every entry in {-1, 0, +1}
  OmegaSequence standardized() const; // entry-wise sign
  std::string to_csv() const;

  bool operator==(const OmegaSequence&) const = default;

private:
  std::vector<Rational> omegas_;
};

// w_ab = w_{a+1} ... w_b for 0 <= a <= b <= N; satisfies w_ac = w_ab * w_bc.
Rational omega_product(const OmegaSequence& seq, int a, int b);

int pair_count(int N); // (N+1)N/2
std::vector<GeneratorPair> generator_pairs(int N); // lexicographic order
int pair_index(int N, GeneratorPair p); // position in generator_pairs(N)

using Term = std::pair<GeneratorPair, Rational>;
using LinComb = std::vector<Term>; // at most one term for these algebras

// [Omega_P, Omega_Q]; antisymmetric, zero terms dropped.
LinComb bracket(const OmegaSequence& seq, GeneratorPair P, GeneratorPair Q);

// Sparse structure-constant table over flat generator indices. For a base
// algebra the indices 0..pair_count(N)-1 follow generator_pairs(N); a
// centrally extended table appends one extra generator at the end. Only
// canonically ordered keys (i < j) are stored; [j,i] = -[i,j].
using SparseVec = std::vector<std::pair<int, Rational>>; // sorted by index

struct StructureTable {
  int n_gens = 0;
  std::map<std::pair<int, int>, SparseVec> entries;

  // accumulate coeff * generator k into [g_i, g_j] (any i != j)
  void add_term(int i, int j, int k, const Rational& coeff);
  SparseVec bracket_flat(int i, int j) const; // antisymmetry applied
};

StructureTable structure_table(const OmegaSequence& seq);

// Evaluates [[x,y],z] + [[y,z],x] + [[z,x],y] on every generator triple;
// returns the triples with a nonzero residual (empty result = Lie algebra).
std::vector<std::array<int, 3>> check_jacobi(const StructureTable& table);

using Matrix = std::vector<std::vector<Rational>>;

// (N+1)x(N+1) matrix  -w_ab e_ab + e_ba; matrix commutators of these
// reproduce the bracket.
Matrix vector_representation(const OmegaSequence& seq, GeneratorPair P);

// (w_N, ..., w_1); generates an isomorphic algebra.
OmegaSequence reverse(const OmegaSequence& seq);

// When w_a = 0 the algebra splits as t (+ (left ⊕ right)) with t Abelian:
//   t     = { Omega_ij : i < a <= j },  dim a(N+1-a)
//   left  = pairs with both indices < a
//   right = pairs with both indices >= a
struct SemidirectSplit {
  std::vector<GeneratorPair> abelian_t;
  std::vector<GeneratorPair> left_sub;
  std::vector<GeneratorPair> right_sub;
};

SemidirectSplit semidirect_split(const OmegaSequence& seq, int a);

} // namespace ck
