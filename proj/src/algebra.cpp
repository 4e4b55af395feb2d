#include "ck/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ck {

GeneratorPair::GeneratorPair(int a_, int b_) : a(a_), b(b_) {
  if (a_ < 0 || a_ >= b_)
    throw std::invalid_argument("generator pair needs 0 <= a < b");
}

std::string GeneratorPair::label() const {
  if (a < 10 && b < 10) return std::to_string(a) + std::to_string(b);
  return std::to_string(a) + "," + std::to_string(b);
}

OmegaSequence::OmegaSequence(std::vector<Rational> omegas)
    : omegas_(std::move(omegas)) {
  if (omegas_.size() < 2)
    throw std::invalid_argument("need at least two contraction parameters");
}

std::optional<OmegaSequence> OmegaSequence::parse(const std::string& csv) {
  std::vector<Rational> vals;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) return std::nullopt;
    auto last = token.find_last_not_of(" \t");
    auto r = parse_rational(token.substr(first, last - first + 1));
    if (!r) return std::nullopt;
    vals.push_back(*r);
  }
  if (vals.size() < 2) return std::nullopt;
  return OmegaSequence(std::move(vals));
}

const Rational& OmegaSequence::omega(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("omega index");
  return omegas_[static_cast<size_t>(i) - 1];
}

bool OmegaSequence::is_standardized() const {
  for (const auto& w : omegas_)
    if (w != 0 && w != 1 && w != -1) return false;
  return true;
}

OmegaSequence OmegaSequence::standardized() const {
  std::vector<Rational> s;
  s.reserve(omegas_.size());
  for (const auto& w : omegas_) s.emplace_back(sign(w));
  return OmegaSequence(std::move(s));
}

std::string OmegaSequence::to_csv() const {
  std::string out;
  for (size_t i = 0; i < omegas_.size(); ++i) {
    if (i) out += ",";
    out += to_string(omegas_[i]);
  }
  return out;
}

Rational omega_product(const OmegaSequence& seq, int a, int b) {
  if (a < 0 || b > seq.n() || a > b)
    throw std::out_of_range("omega_product needs 0 <= a <= b <= N");
  Rational prod = 1;
  for (int i = a + 1; i <= b; ++i) prod *= seq.omega(i);
  return prod;
}

int pair_count(int N) { return (N + 1) * N / 2; }

std::vector<GeneratorPair> generator_pairs(int N) {
  std::vector<GeneratorPair> out;
  out.reserve(static_cast<size_t>(pair_count(N)));
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b <= N; ++b) out.emplace_back(a, b);
  return out;
}

int pair_index(int N, GeneratorPair p) {
  if (p.b > N) throw std::out_of_range("pair index outside algebra");
  return p.a * N - p.a * (p.a - 1) / 2 + (p.b - p.a - 1);
}

LinComb bracket(const OmegaSequence& seq, GeneratorPair P, GeneratorPair Q) {
  if (P.b > seq.n() || Q.b > seq.n())
    throw std::out_of_range("generator pair outside algebra");
  if (Q < P) {
    LinComb flipped = bracket(seq, Q, P);
    for (auto& t : flipped) t.second = -t.second;
    return flipped;
  }
  if (P == Q) return {};
  LinComb out;
  auto push = [&out](GeneratorPair g, Rational c) {
    if (c != 0) out.emplace_back(g, std::move(c));
  };
  // P < Q lexicographically from here on.
  if (P.b == Q.a) { // (a,b),(b,c): shared middle index
    push(GeneratorPair(P.a, Q.b), -1);
  } else if (P.a == Q.a) { // (a,b),(a,c), b < c: shared first index
    push(GeneratorPair(P.b, Q.b), omega_product(seq, P.a, P.b));
  } else if (P.b == Q.b) { // (a,c),(b,c), a < b: shared last index
    push(GeneratorPair(P.a, Q.a), omega_product(seq, Q.a, Q.b));
  }
  // four distinct indices: zero
  return out;
}

void StructureTable::add_term(int i, int j, int k, const Rational& coeff) {
  if (i == j || coeff == 0) return;
  Rational c = coeff;
  if (j < i) {
    std::swap(i, j);
    c = -c;
  }
  SparseVec& row = entries[{i, j}];
  auto it = std::lower_bound(
      row.begin(), row.end(), k,
      [](const std::pair<int, Rational>& e, int key) { return e.first < key; });
  if (it != row.end() && it->first == k) {
    it->second += c;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {k, c});
  }
  if (row.empty()) entries.erase({i, j});
}

SparseVec StructureTable::bracket_flat(int i, int j) const {
  if (i == j) return {};
  bool flip = j < i;
  if (flip) std::swap(i, j);
  auto it = entries.find({i, j});
  if (it == entries.end()) return {};
  SparseVec out = it->second;
  if (flip)
    for (auto& t : out) t.second = -t.second;
  return out;
}

StructureTable structure_table(const OmegaSequence& seq) {
  const int N = seq.n();
  StructureTable table;
  table.n_gens = pair_count(N);
  const auto pairs = generator_pairs(N);
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j)
      for (const auto& [g, c] : bracket(seq, pairs[i], pairs[j]))
        table.add_term(static_cast<int>(i), static_cast<int>(j),
                       pair_index(N, g), c);
  return table;
}

std::vector<std::array<int, 3>> check_jacobi(const StructureTable& table) {
  std::vector<std::array<int, 3>> bad;
  const int n = table.n_gens;
  std::map<int, Rational> acc;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        acc.clear();
        auto fold = [&](int x, int y, int z) {
          // [[x,y],z]
          for (const auto& [g, c] : table.bracket_flat(x, y))
            for (const auto& [h, d] : table.bracket_flat(g, z)) acc[h] += c * d;
        };
        fold(i, j, k);
        fold(j, k, i);
        fold(k, i, j);
        for (const auto& [g, v] : acc)
          if (v != 0) {
            bad.push_back({i, j, k});
            break;
          }
      }
  return bad;
}

Matrix vector_representation(const OmegaSequence& seq, GeneratorPair P) {
  const int dim = seq.n() + 1;
  if (P.b >= dim) throw std::out_of_range("generator pair outside algebra");
  Matrix m(static_cast<size_t>(dim), std::vector<Rational>(static_cast<size_t>(dim), 0));
  m[static_cast<size_t>(P.a)][static_cast<size_t>(P.b)] = -omega_product(seq, P.a, P.b);
  m[static_cast<size_t>(P.b)][static_cast<size_t>(P.a)] = 1;
  return m;
}

OmegaSequence reverse(const OmegaSequence& seq) {
  std::vector<Rational> rev(seq.omegas().rbegin(), seq.omegas().rend());
  return OmegaSequence(std::move(rev));
}

SemidirectSplit semidirect_split(const OmegaSequence& seq, int a) {
  if (a < 1 || a > seq.n()) throw std::out_of_range("split position");
  if (seq.omega(a) != 0)
    throw std::invalid_argument("no semidirect split: omega_a is nonzero");
  SemidirectSplit out;
  for (const auto& p : generator_pairs(seq.n())) {
    if (p.a < a && p.b >= a)
      out.abelian_t.push_back(p);
    else if (p.b < a)
      out.left_sub.push_back(p);
    else
      out.right_sub.push_back(p);
  }
  return out;
}

} // namespace ck
