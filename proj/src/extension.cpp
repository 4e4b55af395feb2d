#include "ck/extension.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ck {

ExtendedAlgebra extend_unchecked(const OmegaSequence& seq,
                                 const TwoCochain& cochain) {
  StructureTable base = structure_table(seq);
  if (cochain.n_gens() != base.n_gens)
    throw std::invalid_argument("cochain size does not match the algebra");
  StructureTable table = base;
  table.n_gens = base.n_gens + 1;
  const int center = base.n_gens;
  for (const auto& [key, value] : cochain.values())
    table.add_term(key.first, key.second, center, value);
  return {seq, cochain, std::move(table)};
}

ExtendedAlgebra extend(const OmegaSequence& seq,
                       const ExtensionAssignment& assign) {
  return extend_unchecked(seq, derive_full_cochain(seq, assign));
}

TrivializeResult trivialize(const OmegaSequence& seq,
                            const ExtensionAssignment& assign) {
  auto violations = constraint_check(seq, assign);
  if (!violations.empty())
    throw std::invalid_argument("inconsistent assignment: " + violations[0]);

  const int N = seq.n();
  TrivializeResult out;
  // type I values vanish after shifting the non-consecutive generators
  for (const auto& [coef, value] : assign.values()) {
    if (coef.kind != CoefKind::TypeI_tau) continue;
    out.shifts.add(pair_index(N, {coef.i, coef.j}), -value);
  }

  // per consecutive generator Omega_{p,p+1}: alpha^F_p shrinks by w_p * mu,
  // alpha^L_p by w_{p+2} * mu, so one shift clears whatever a nonzero
  // divisor reaches
  for (int p = 0; p <= N - 1; ++p) {
    const bool has_f = p >= 1;
    const bool has_l = p <= N - 2;
    const Rational f = has_f ? assign.at(alpha_f(p)) : Rational(0);
    const Rational l = has_l ? assign.at(alpha_l(p)) : Rational(0);
    const Rational wf = has_f ? seq.omega(p) : Rational(0);
    const Rational wl = has_l ? seq.omega(p + 2) : Rational(0);

    Rational mu(0);
    if (has_f && wf != 0) {
      mu = f / wf;
      if (has_l && wl != 0 && mu != l / wl)
        throw std::logic_error("redefinition candidates disagree");
    } else if (has_l && wl != 0) {
      mu = l / wl;
    }

    if (mu != 0) out.shifts.add(pair_index(N, {p, p + 1}), mu);
    if (has_f) out.reduced.set(alpha_f(p), f - wf * mu);
    if (has_l) out.reduced.set(alpha_l(p), l - wl * mu);
  }

  // type III values are untouched by any redefinition
  for (const auto& [coef, value] : assign.values())
    if (coef.kind == CoefKind::TypeIII_beta) out.reduced.set(coef, value);
  return out;
}

std::vector<BasicCoefficient> group_compactness_filter(
    const OmegaSequence& seq,
    const std::vector<BasicCoefficient>& nontrivial) {
  if (!seq.is_standardized())
    throw std::invalid_argument("filter expects a standardized sequence");
  std::vector<BasicCoefficient> out;
  for (const auto& coef : nontrivial) {
    if (coef.kind == CoefKind::TypeIII_beta &&
        (seq.omega(coef.i) > 0 || seq.omega(coef.j) > 0))
      continue;
    out.push_back(coef);
  }
  return out;
}

namespace {

struct Symbols {
  std::string omega, alpha_f, alpha_l, beta, tau, big_omega, xi;
};

Symbols symbols(RenderOptions opts) {
  if (opts.unicode) return {"ω", "α^F", "α^L", "β", "τ", "Ω", "Ξ"};
  return {"omega", "alpha^F", "alpha^L", "beta", "tau", "Omega", "Xi"};
}

std::string coefficient_name(const BasicCoefficient& c, const Symbols& sym) {
  std::string stem;
  switch (c.kind) {
    case CoefKind::TypeI_tau: stem = sym.tau; break;
    case CoefKind::TypeIIF: stem = sym.alpha_f; break;
    case CoefKind::TypeIIL: stem = sym.alpha_l; break;
    case CoefKind::TypeIII_beta: stem = sym.beta; break;
  }
  return stem + "_{" + GeneratorPair(c.i, c.j).label() + "}";
}

std::string generator_name(GeneratorPair p, const Symbols& sym) {
  return sym.big_omega + "_{" + p.label() + "}";
}

// "coeff*symbol" with the 1, -1 and fraction spellings normalized
void append_term(std::string& rhs, const Rational& coeff,
                 const std::string& symbol) {
  if (coeff == 0) return;
  const bool negative = coeff < 0;
  const Rational mag = negative ? Rational(-coeff) : coeff;
  if (rhs.empty())
    rhs += negative ? "-" : "";
  else
    rhs += negative ? " - " : " + ";
  if (mag != 1) rhs += to_string(mag) + "*";
  rhs += symbol;
}

// bracket rows in the order [ab,ac], [ab,bc], [ac,bc] per index triple
// a<b<c, then the disjoint pairs; matches the worked listings upstream
std::vector<std::pair<GeneratorPair, GeneratorPair>> row_keys(int N) {
  std::vector<std::pair<GeneratorPair, GeneratorPair>> out;
  for (int a = 0; a <= N - 2; ++a)
    for (int b = a + 1; b <= N - 1; ++b)
      for (int c = b + 1; c <= N; ++c) {
        out.push_back({{a, b}, {a, c}});
        out.push_back({{a, b}, {b, c}});
        out.push_back({{a, c}, {b, c}});
      }
  const auto pairs = generator_pairs(N);
  for (size_t i = 0; i < pairs.size(); ++i)
    for (size_t j = i + 1; j < pairs.size(); ++j) {
      const auto &P = pairs[i], &Q = pairs[j];
      if (P.a != Q.a && P.a != Q.b && P.b != Q.a && P.b != Q.b)
        out.push_back({P, Q});
    }
  return out;
}

std::string row_lhs(GeneratorPair P, GeneratorPair Q, const Symbols& sym) {
  return "[" + generator_name(P, sym) + ", " + generator_name(Q, sym) + "]";
}

} // namespace

std::string CommutatorTable::to_text() const {
  std::string out;
  for (const auto& row : rows) {
    out += row;
    out += '\n';
  }
  return out;
}

CommutatorTable commutator_table(const ExtendedAlgebra& ext,
                                 RenderOptions opts) {
  const Symbols sym = symbols(opts);
  const int N = ext.base.n();
  const auto pairs = generator_pairs(N);
  const int center = ext.center_index();

  CommutatorTable out;
  for (const auto& [P, Q] : row_keys(N)) {
    const SparseVec terms =
        ext.table.bracket_flat(pair_index(N, P), pair_index(N, Q));
    if (terms.empty()) continue;
    std::string rhs;
    for (const auto& [gen, coeff] : terms)
      append_term(rhs, coeff,
                  gen == center ? sym.xi
                                : generator_name(pairs[static_cast<size_t>(gen)],
                                                 sym));
    out.rows.push_back(row_lhs(P, Q, sym) + " = " + rhs);
  }
  return out;
}

CommutatorTable generic_commutator_table(
    const OmegaSequence& seq, const std::vector<BasicCoefficient>& coefficients,
    RenderOptions opts) {
  const Symbols sym = symbols(opts);
  const std::set<BasicCoefficient> wanted(coefficients.begin(),
                                          coefficients.end());

  CommutatorTable out;
  for (const auto& [P, Q] : row_keys(seq.n())) {
    std::string rhs;
    for (const auto& [gen, coeff] : bracket(seq, P, Q))
      append_term(rhs, coeff, generator_name(gen, sym));
    if (auto entry = symbolic_entry(seq, P, Q);
        entry && wanted.count(entry->second))
      append_term(rhs, entry->first,
                  coefficient_name(entry->second, sym) + "*" + sym.xi);
    if (rhs.empty()) rhs = "0";
    out.rows.push_back(row_lhs(P, Q, sym) + " = " + rhs);
  }
  out.rows.push_back("[" + sym.xi + ", *] = 0");
  return out;
}

} // namespace ck
