#pragma once

/*
 * Exact sparse linear algebra over the rationals. Rows are scaled to
 * primitive integer vectors and reduced by fraction-free cross-multiplied
 * elimination with a gcd cleanup after every combination, so every rank and
 * kernel is exact. Pivots are chosen column by column in ascending order,
 * which keeps kernels and bases deterministic across runs.
 */

#include "ck/rational.hpp"

#include <map>
#include <vector>

namespace ck {

class RationalMatrix {
public:
  RationalMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const Rational& v); // accumulates
  Rational at(int r, int c) const;           // zero when unset

  const std::map<int, Rational>& row(int r) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::map<int, Rational>> data_;
};

struct RankKernel {
  int rank = 0;
  // Primitive integer-normalized spanning set of the null space; each
  // vector has cols entries and satisfies M v = 0 exactly.
  std::vector<std::vector<Rational>> kernel_basis;
};

RankKernel rank_and_kernel(const RationalMatrix& M);
int rank(const RationalMatrix& M);

// True iff M x = target has a solution (exact column-span membership).
bool solvable(const RationalMatrix& M, const std::vector<Rational>& target);

// Incremental row-space rank tracker: add() reports whether the vector was
// independent of everything accepted so far. Used to pick greedy bases.
class EchelonAccumulator {
public:
  explicit EchelonAccumulator(int cols);
  bool add(const std::vector<Rational>& v);
  int rank() const { return static_cast<int>(rows_.size()); }

private:
  int cols_ = 0;
  // echelon rows keyed by leading column, each a primitive integer vector
  std::map<int, std::vector<Int>> rows_;
};

} // namespace ck
