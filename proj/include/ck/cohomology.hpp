#pragma once

/*
 * Brute-force second cohomology with trivial real coefficients for any
 * finite-dimensional Lie algebra handed over as a StructureTable.
 *
 * A two-cochain is an antisymmetric bilinear form alpha on the algebra. It
 * is a cocycle when, for every generator triple (x,y,z),
 *
 *     alpha([x,y],z) + alpha([y,z],x) + alpha([z,x],y) = 0,
 *
 * and a coboundary when alpha(x,y) = mu([x,y]) for some linear form mu.
 * H^2 = Z^2/B^2 counts inequivalent one-dimensional central extensions.
 * Everything here reduces to exact kernels and ranks of sparse rational
 * systems; this module is the ground truth the closed-form classification
 * is checked against.
 */

#include "ck/algebra.hpp"
#include "ck/linalg.hpp"

#include <map>
#include <vector>

namespace ck {

// Antisymmetric rational form on generator pairs; only canonically ordered
// keys (i < j) are stored, and only nonzero values.
class TwoCochain {
public:
  explicit TwoCochain(int n_gens);

  int n_gens() const { return n_gens_; }
  Rational at(int i, int j) const; // antisymmetric lookup, 0 on the diagonal
  void set(int i, int j, const Rational& v);
  const std::map<std::pair<int, int>, Rational>& values() const {
    return values_;
  }

  bool operator==(const TwoCochain&) const = default;

private:
  int n_gens_ = 0;
  std::map<std::pair<int, int>, Rational> values_;
};

// Linear form on the generators; unset entries read as zero.
class OneCochain {
public:
  OneCochain() = default;
  Rational at(int i) const;
  void add(int i, const Rational& v);
  const std::map<int, Rational>& values() const { return values_; }

  bool operator==(const OneCochain&) const = default;

private:
  std::map<int, Rational> values_;
};

// Canonical coordinate order for cochains: keys (i,j), i < j, sorted
// lexicographically. Fixes variable order everywhere downstream.
std::vector<std::pair<int, int>> cochain_keys(int n_gens);
int cochain_key_index(int n_gens, int i, int j);
std::vector<Rational> cochain_to_vector(const TwoCochain& c);
TwoCochain cochain_from_vector(int n_gens, const std::vector<Rational>& v);

// (delta mu)(x,y) = mu([x,y])
TwoCochain coboundary(const StructureTable& table, const OneCochain& mu);

// Cocycle system: one equation per generator triple, one column per
// cochain key. Rows are indexed by triples (i<j<k) in lexicographic order.
RationalMatrix cocycle_matrix(const StructureTable& table);

// Coboundary map as a matrix: rows are cochain keys, columns generators.
RationalMatrix coboundary_matrix(const StructureTable& table);

struct CochainSpace {
  int dim = 0;
  std::vector<TwoCochain> basis;
};

CochainSpace cocycle_space(const StructureTable& table);   // Z^2
CochainSpace coboundary_space(const StructureTable& table); // B^2
int h2_dimension(const StructureTable& table);             // dim Z^2 - dim B^2

// dim H^2 cocycles spanning a complement of B^2 inside Z^2, picked by
// greedy rank extension of a B^2 basis in canonical coordinate order.
std::vector<TwoCochain> h2_representatives(const StructureTable& table);

bool is_cocycle(const StructureTable& table, const TwoCochain& c);
bool is_coboundary(const StructureTable& table, const TwoCochain& c);

// Number of generator-pair triples of so_{w}(N+1) grouped by how many
// distinct indices the three pairs involve (3, 4, 5 or 6). These are the
// sizes of the equation groups in the cocycle system.
std::map<int, long long> jacobi_equation_census(int N);

} // namespace ck
