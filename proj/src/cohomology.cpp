#include "ck/cohomology.hpp"

#include <set>
#include <stdexcept>

namespace ck {

TwoCochain::TwoCochain(int n_gens) : n_gens_(n_gens) {
  if (n_gens < 1) throw std::invalid_argument("cochain needs generators");
}

Rational TwoCochain::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_gens_ || j >= n_gens_)
    throw std::out_of_range("cochain key");
  if (i == j) return 0;
  bool flip = j < i;
  if (flip) std::swap(i, j);
  auto it = values_.find({i, j});
  if (it == values_.end()) return 0;
  return flip ? -it->second : it->second;
}

void TwoCochain::set(int i, int j, const Rational& v) {
  if (i < 0 || j < 0 || i >= n_gens_ || j >= n_gens_ || i == j)
    throw std::out_of_range("cochain key");
  Rational val = v;
  if (j < i) {
    std::swap(i, j);
    val = -val;
  }
  if (val == 0)
    values_.erase({i, j});
  else
    values_[{i, j}] = val;
}

Rational OneCochain::at(int i) const {
  auto it = values_.find(i);
  return it == values_.end() ? Rational(0) : it->second;
}

void OneCochain::add(int i, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = values_.try_emplace(i, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) values_.erase(it);
  }
}

std::vector<std::pair<int, int>> cochain_keys(int n_gens) {
  std::vector<std::pair<int, int>> keys;
  keys.reserve(static_cast<size_t>(n_gens) * (n_gens - 1) / 2);
  for (int i = 0; i < n_gens; ++i)
    for (int j = i + 1; j < n_gens; ++j) keys.emplace_back(i, j);
  return keys;
}

int cochain_key_index(int n_gens, int i, int j) {
  if (i < 0 || j <= i || j >= n_gens) throw std::out_of_range("cochain key");
  return i * n_gens - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<Rational> cochain_to_vector(const TwoCochain& c) {
  const int n = c.n_gens();
  std::vector<Rational> v(static_cast<size_t>(n * (n - 1) / 2), 0);
  for (const auto& [key, val] : c.values())
    v[static_cast<size_t>(cochain_key_index(n, key.first, key.second))] = val;
  return v;
}

TwoCochain cochain_from_vector(int n_gens, const std::vector<Rational>& v) {
  TwoCochain c(n_gens);
  const auto keys = cochain_keys(n_gens);
  if (v.size() != keys.size()) throw std::invalid_argument("vector length");
  for (size_t t = 0; t < keys.size(); ++t)
    if (v[t] != 0) c.set(keys[t].first, keys[t].second, v[t]);
  return c;
}

TwoCochain coboundary(const StructureTable& table, const OneCochain& mu) {
  TwoCochain out(table.n_gens);
  for (const auto& [key, terms] : table.entries) {
    Rational v = 0;
    for (const auto& [g, c] : terms) v += c * mu.at(g);
    if (v != 0) out.set(key.first, key.second, v);
  }
  return out;
}

namespace {

void require_lie_algebra(const StructureTable& table) {
  if (!check_jacobi(table).empty())
    throw std::invalid_argument(
        "structure table violates the Jacobi identity");
}

} // namespace

RationalMatrix cocycle_matrix(const StructureTable& table) {
  const int n = table.n_gens;
  const long long triples =
      static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
  RationalMatrix M(static_cast<int>(triples), n * (n - 1) / 2);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        // alpha([x,y],z) contributes bracket coefficients against the
        // cochain coordinate of (g,z) for each bracket term g
        auto fold = [&](int x, int y, int z) {
          for (const auto& [g, c] : table.bracket_flat(x, y)) {
            if (g == z) continue;
            if (g < z)
              M.add(row, cochain_key_index(n, g, z), c);
            else
              M.add(row, cochain_key_index(n, z, g), -c);
          }
        };
        fold(i, j, k);
        fold(j, k, i);
        fold(k, i, j);
        ++row;
      }
  return M;
}

RationalMatrix coboundary_matrix(const StructureTable& table) {
  const int n = table.n_gens;
  RationalMatrix M(n * (n - 1) / 2, n);
  for (const auto& [key, terms] : table.entries) {
    const int row = cochain_key_index(n, key.first, key.second);
    for (const auto& [g, c] : terms) M.add(row, g, c);
  }
  return M;
}

CochainSpace cocycle_space(const StructureTable& table) {
  require_lie_algebra(table);
  RankKernel rk = rank_and_kernel(cocycle_matrix(table));
  CochainSpace out;
  out.dim = static_cast<int>(rk.kernel_basis.size());
  for (const auto& v : rk.kernel_basis)
    out.basis.push_back(cochain_from_vector(table.n_gens, v));
  return out;
}

CochainSpace coboundary_space(const StructureTable& table) {
  const int n = table.n_gens;
  const int n_keys = n * (n - 1) / 2;
  CochainSpace out;
  EchelonAccumulator acc(n_keys);
  // greedy image basis: push delta(e_g) for each generator in order
  for (int g = 0; g < n; ++g) {
    OneCochain mu;
    mu.add(g, 1);
    TwoCochain d = coboundary(table, mu);
    if (d.values().empty()) continue;
    if (acc.add(cochain_to_vector(d))) out.basis.push_back(std::move(d));
  }
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

int h2_dimension(const StructureTable& table) {
  require_lie_algebra(table);
  const int n_keys = table.n_gens * (table.n_gens - 1) / 2;
  const int z2 = n_keys - rank(cocycle_matrix(table));
  const int b2 = rank(coboundary_matrix(table));
  return z2 - b2;
}

std::vector<TwoCochain> h2_representatives(const StructureTable& table) {
  require_lie_algebra(table);
  const int n = table.n_gens;
  const int n_keys = n * (n - 1) / 2;

  EchelonAccumulator acc(n_keys);
  for (const auto& b : coboundary_space(table).basis)
    acc.add(cochain_to_vector(b));

  std::vector<TwoCochain> reps;
  RankKernel rk = rank_and_kernel(cocycle_matrix(table));
  for (const auto& z : rk.kernel_basis)
    if (acc.add(z)) reps.push_back(cochain_from_vector(n, z));
  return reps;
}

bool is_cocycle(const StructureTable& table, const TwoCochain& c) {
  const int n = table.n_gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Rational sum = 0;
        auto fold = [&](int x, int y, int z) {
          for (const auto& [g, w] : table.bracket_flat(x, y))
            sum += w * c.at(g, z);
        };
        fold(i, j, k);
        fold(j, k, i);
        fold(k, i, j);
        if (sum != 0) return false;
      }
  return true;
}

bool is_coboundary(const StructureTable& table, const TwoCochain& c) {
  return solvable(coboundary_matrix(table), cochain_to_vector(c));
}

std::map<int, long long> jacobi_equation_census(int N) {
  std::map<int, long long> census{{3, 0}, {4, 0}, {5, 0}, {6, 0}};
  const auto pairs = generator_pairs(N);
  const size_t n = pairs.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        std::set<int> idx{pairs[i].a, pairs[i].b, pairs[j].a,
                          pairs[j].b, pairs[k].a, pairs[k].b};
        census[static_cast<int>(idx.size())] += 1;
      }
  return census;
}

} // namespace ck
