#include "ck/identify.hpp"

#include <stdexcept>

namespace ck {

namespace {

// Signature of the invariant quadratic form of so_{w_lo+1..w_hi}(hi-lo+1):
// counts of positive/negative entries in diag(1, w_{lo+1}, w_{lo+1}w_{lo+2},
// ...). Zero entries cannot occur here (callers pass all-nonzero ranges).
std::pair<int, int> signature(const OmegaSequence& seq, int lo, int hi) {
  int pos = 1, neg = 0;
  Rational prod = 1;
  for (int i = lo + 1; i <= hi; ++i) {
    prod *= seq.omega(i);
    (prod > 0 ? pos : neg) += 1;
  }
  if (neg > pos) std::swap(pos, neg);
  return {pos, neg};
}

std::string so_stem(std::pair<int, int> pq) {
  auto [p, q] = pq;
  if (q == 0) return "so(" + std::to_string(p) + ")";
  return "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

} // namespace

std::optional<AlgebraName> identify_name(const OmegaSequence& seq) {
  if (!seq.is_standardized())
    throw std::invalid_argument("identify expects a standardized sequence");
  const int N = seq.n();
  std::vector<int> zeros;
  for (int i = 1; i <= N; ++i)
    if (seq.omega(i) == 0) zeros.push_back(i);

  if (zeros.empty()) return AlgebraName{so_stem(signature(seq, 0, N)), ""};

  if (static_cast<int>(zeros.size()) == N) {
    std::string name = "flag ";
    name.append(static_cast<size_t>(N), 'i');
    name += "so(1)";
    return AlgebraName{name, ""};
  }

  // w = (+-1, 0, 1, ..., 1): the two Newton-Hooke algebras.
  if (N >= 3 && zeros.size() == 1 && zeros[0] == 2) {
    bool tail_ones = true;
    for (int i = 3; i <= N; ++i)
      if (seq.omega(i) != 1) tail_ones = false;
    if (tail_ones && seq.omega(1) == 1)
      return AlgebraName{"oscillating Newton-Hooke", ""};
    if (tail_ones && seq.omega(1) == -1)
      return AlgebraName{"expanding Newton-Hooke", ""};
    return std::nullopt;
  }

  // k leading zeros, everything after nonzero: i...iso(p,q).
  const int k = static_cast<int>(zeros.size());
  if (zeros.back() == k) { // zeros occupy exactly positions 1..k
    auto pq = signature(seq, k, N);
    std::string name(static_cast<size_t>(k), 'i');
    name += so_stem(pq);
    std::string alias;
    if (k == 1 && pq.second == 0) alias = "Euclidean";
    if (k == 1 && pq.second == 1) alias = "Poincare";
    if (k == 2 && pq.second == 0)
      alias = std::to_string(pq.first) + "+1 Galilei";
    return AlgebraName{name, alias};
  }

  // only the trailing parameter vanishes: i'so(p,q).
  if (zeros.size() == 1 && zeros[0] == N)
    return AlgebraName{"i'" + so_stem(signature(seq, 0, N - 1)), ""};

  // first and last vanish, middle nonzero: ii'so(p,q).
  if (zeros.size() == 2 && zeros[0] == 1 && zeros[1] == N) {
    auto pq = signature(seq, 1, N - 1);
    std::string alias;
    if (pq.second == 0) alias = std::to_string(pq.first) + "+1 Carroll";
    return AlgebraName{"ii'" + so_stem(pq), alias};
  }

  return std::nullopt;
}

std::optional<std::string> identify(const OmegaSequence& seq) {
  auto full = identify_name(seq);
  if (!full) return std::nullopt;
  return full->name;
}

std::string display_name(const OmegaSequence& seq) {
  auto full = identify_name(seq);
  if (!full) return "";
  if (full->alias.empty()) return full->name;
  return full->name + " (" + full->alias + ")";
}

} // namespace ck
