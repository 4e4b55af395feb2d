#include "ck/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ck {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// sparse integer row, sorted by column
using IntRow = std::vector<std::pair<int, Int>>;

void make_primitive(IntRow& row) {
  Int g = 0;
  for (const auto& [c, v] : row) g = gcd(g, v);
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

IntRow to_int_row(const std::map<int, Rational>& entries) {
  Int scale = 1;
  for (const auto& [c, v] : entries)
    if (v != 0) scale = lcm(scale, denominator(v));
  IntRow row;
  for (const auto& [c, v] : entries) {
    if (v == 0) continue;
    row.emplace_back(c, numerator(v) * (scale / denominator(v)));
  }
  make_primitive(row);
  return row;
}

const Int* find_col(const IntRow& row, int col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const std::pair<int, Int>& e, int key) { return e.first < key; });
  if (it != row.end() && it->first == col) return &it->second;
  return nullptr;
}

// pval * target - tval * pivot, merged and gcd-reduced. Exact integers
// throughout; this is the whole reason ranks here can be trusted.
IntRow combine(const IntRow& target, const IntRow& pivot, const Int& tval,
               const Int& pval) {
  IntRow out;
  out.reserve(target.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() ||
        (i < target.size() && target[i].first < pivot[j].first)) {
      out.emplace_back(target[i].first, pval * target[i].second);
      ++i;
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      out.emplace_back(pivot[j].first, -tval * pivot[j].second);
      ++j;
    } else {
      Int v = pval * target[i].second - tval * pivot[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

struct Elimination {
  std::vector<IntRow> pivot_rows; // leading column of row t is pivot_cols[t]
  std::vector<int> pivot_cols;    // strictly ascending
};

Elimination eliminate(const RationalMatrix& M) {
  std::vector<IntRow> work;
  work.reserve(static_cast<size_t>(M.rows()));
  for (int r = 0; r < M.rows(); ++r) {
    IntRow row = to_int_row(M.row(r));
    if (!row.empty()) work.push_back(std::move(row));
  }
  Elimination e;
  for (int c = 0; c < M.cols() && !work.empty(); ++c) {
    size_t found = work.size();
    for (size_t idx = 0; idx < work.size(); ++idx)
      if (find_col(work[idx], c)) {
        found = idx;
        break;
      }
    if (found == work.size()) continue; // free column
    IntRow piv = std::move(work[found]);
    work.erase(work.begin() + static_cast<long>(found));
    const Int pval = *find_col(piv, c);
    for (auto& row : work) {
      const Int* tval = find_col(row, c);
      if (tval) row = combine(row, piv, *tval, pval);
    }
    std::erase_if(work, [](const IntRow& r) { return r.empty(); });
    e.pivot_cols.push_back(c);
    e.pivot_rows.push_back(std::move(piv));
  }
  return e;
}

std::vector<Rational> normalize_primitive(std::vector<Rational> v) {
  Int scale = 1;
  for (const auto& x : v)
    if (x != 0) scale = lcm(scale, denominator(x));
  Int g = 0;
  std::vector<Int> ints(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = numerator(v[i]) * (scale / denominator(v[i]));
    g = gcd(g, ints[i]);
  }
  if (g == 0) g = 1;
  for (size_t i = 0; i < v.size(); ++i) v[i] = Rational(ints[i] / g);
  return v;
}

} // namespace

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative extent");
}

void RationalMatrix::add(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix entry");
  if (v == 0) return;
  auto& row = data_[static_cast<size_t>(r)];
  auto [it, inserted] = row.try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

Rational RationalMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix entry");
  const auto& row = data_[static_cast<size_t>(r)];
  auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

const std::map<int, Rational>& RationalMatrix::row(int r) const {
  return data_.at(static_cast<size_t>(r));
}

RankKernel rank_and_kernel(const RationalMatrix& M) {
  Elimination e = eliminate(M);
  RankKernel out;
  out.rank = static_cast<int>(e.pivot_cols.size());

  std::vector<bool> is_pivot(static_cast<size_t>(M.cols()), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

  for (int f = 0; f < M.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<size_t>(M.cols()), 0);
    v[static_cast<size_t>(f)] = 1;
    // pivot rows have their leading entry at the pivot column, so back
    // substitution in reverse pivot order only ever reads filled entries
    for (size_t t = e.pivot_rows.size(); t-- > 0;) {
      const int c = e.pivot_cols[t];
      const IntRow& row = e.pivot_rows[t];
      Rational sum = 0;
      Rational diag = 0;
      for (const auto& [col, val] : row) {
        if (col == c)
          diag = Rational(val);
        else if (v[static_cast<size_t>(col)] != 0)
          sum += Rational(val) * v[static_cast<size_t>(col)];
      }
      v[static_cast<size_t>(c)] = -sum / diag;
    }
    out.kernel_basis.push_back(normalize_primitive(std::move(v)));
  }
  return out;
}

int rank(const RationalMatrix& M) {
  return static_cast<int>(eliminate(M).pivot_cols.size());
}

bool solvable(const RationalMatrix& M, const std::vector<Rational>& target) {
  if (static_cast<int>(target.size()) != M.rows())
    throw std::invalid_argument("target length");
  // the target goes in the last column, so the pivot sweep reduces the
  // original columns first and any leftover pivot there certifies failure
  RationalMatrix aug(M.rows(), M.cols() + 1);
  for (int r = 0; r < M.rows(); ++r) {
    for (const auto& [c, v] : M.row(r)) aug.add(r, c, v);
    aug.add(r, M.cols(), target[static_cast<size_t>(r)]);
  }
  Elimination e = eliminate(aug);
  return e.pivot_cols.empty() || e.pivot_cols.back() != M.cols();
}

EchelonAccumulator::EchelonAccumulator(int cols) : cols_(cols) {}

bool EchelonAccumulator::add(const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector length");
  std::vector<Rational> prim = normalize_primitive(v);
  std::vector<Int> vec(prim.size());
  for (size_t i = 0; i < prim.size(); ++i) vec[i] = numerator(prim[i]);

  auto leading = [](const std::vector<Int>& w) {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) return static_cast<int>(i);
    return -1;
  };

  int lead = leading(vec);
  while (lead >= 0) {
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      Int g = 0;
      for (const auto& x : vec) g = gcd(g, x);
      if (g > 1)
        for (auto& x : vec) x /= g;
      rows_.emplace(lead, std::move(vec));
      return true;
    }
    const std::vector<Int>& piv = it->second;
    const Int a = piv[static_cast<size_t>(lead)];
    const Int b = vec[static_cast<size_t>(lead)];
    for (size_t i = 0; i < vec.size(); ++i) vec[i] = a * vec[i] - b * piv[i];
    lead = leading(vec);
  }
  return false;
}

} // namespace ck
