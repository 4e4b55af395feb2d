#include "ck/report.hpp"

#include "ck/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <thread>

namespace ck {

namespace {

std::string sequence_text(const OmegaSequence& seq) {
  return "(" + seq.to_csv() + ")";
}

std::vector<std::string> coefficient_names(
    const std::vector<BasicCoefficient>& coefs, bool unicode) {
  std::vector<std::string> out;
  out.reserve(coefs.size());
  for (const auto& c : coefs) out.push_back(c.name(unicode));
  return out;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

} // namespace

AnalysisReport analyze_sequence(const OmegaSequence& seq,
                                AnalysisOptions opts) {
  AnalysisReport r{seq, seq.standardized()};
  std::string display = display_name(r.standardized);
  if (!display.empty()) r.name = display;

  r.formula = h2_dimension_formula(seq);
  const auto nontrivial = classify_nontrivial(seq);
  r.generators = coefficient_names(nontrivial, opts.unicode);
  r.group_generators = coefficient_names(
      group_compactness_filter(r.standardized, nontrivial), opts.unicode);

  if (opts.with_oracle) {
    const StructureTable table = structure_table(seq);
    const int keys = static_cast<int>(cochain_keys(table.n_gens).size());
    r.z2 = keys - rank(cocycle_matrix(table));
    r.b2 = rank(coboundary_matrix(table));
    r.h2 = *r.z2 - *r.b2;
    r.agree = (*r.h2 == r.formula);
  }

  if (opts.with_brackets)
    r.brackets =
        generic_commutator_table(seq, nontrivial, {opts.unicode}).rows;
  return r;
}

namespace {

nlohmann::json omega_json(const OmegaSequence& seq) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& w : seq.omegas()) arr.push_back(to_string(w));
  return arr;
}

OmegaSequence omega_from_json(const nlohmann::json& arr) {
  std::vector<Rational> w;
  for (const auto& item : arr) {
    auto parsed = parse_rational(item.get<std::string>());
    if (!parsed) throw std::invalid_argument("bad rational in omega array");
    w.push_back(*parsed);
  }
  return OmegaSequence(std::move(w));
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
  if (v) return nlohmann::json(*v);
  return nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> opt_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

} // namespace

nlohmann::json report_to_json(const AnalysisReport& report) {
  nlohmann::json dims;
  dims["z2"] = opt_json(report.z2);
  dims["b2"] = opt_json(report.b2);
  dims["h2"] = opt_json(report.h2);
  dims["formula"] = report.formula;

  nlohmann::json j;
  j["n"] = report.sequence.n();
  j["omega"] = omega_json(report.sequence);
  j["name"] = opt_json(report.name);
  j["dims"] = dims;
  j["agree"] = opt_json(report.agree);
  j["generators"] = report.generators;
  j["group_generators"] = report.group_generators;
  if (report.brackets) j["brackets"] = *report.brackets;
  return j;
}

AnalysisReport report_from_json(const nlohmann::json& j) {
  OmegaSequence seq = omega_from_json(j.at("omega"));
  AnalysisReport r{seq, seq.standardized()};
  r.name = opt_from_json<std::string>(j.at("name"));
  const auto& dims = j.at("dims");
  r.z2 = opt_from_json<int>(dims.at("z2"));
  r.b2 = opt_from_json<int>(dims.at("b2"));
  r.h2 = opt_from_json<int>(dims.at("h2"));
  r.formula = dims.at("formula").get<int>();
  r.agree = opt_from_json<bool>(j.at("agree"));
  r.generators = j.at("generators").get<std::vector<std::string>>();
  r.group_generators =
      j.at("group_generators").get<std::vector<std::string>>();
  if (j.contains("brackets"))
    r.brackets = j.at("brackets").get<std::vector<std::string>>();
  return r;
}

std::string report_to_text(const AnalysisReport& report,
                           bool show_group_filter) {
  std::string out;
  out += "sequence: " + sequence_text(report.sequence) + "\n";
  if (report.standardized != report.sequence)
    out += "standardized: " + sequence_text(report.standardized) + "\n";
  if (report.name) out += "name: " + *report.name + "\n";
  out += "formula dim H^2 = " + std::to_string(report.formula) + "\n";
  if (report.h2) {
    out += "oracle dims: Z^2 = " + std::to_string(*report.z2) +
           ", B^2 = " + std::to_string(*report.b2) +
           ", H^2 = " + std::to_string(*report.h2) + "\n";
    out += std::string("agreement: ") + (*report.agree ? "yes" : "NO") + "\n";
  }
  out += "nontrivial coefficients: " +
         (report.generators.empty() ? "none" : join(report.generators, ", ")) +
         "\n";
  if (show_group_filter)
    out += "group-level coefficients: " +
           (report.group_generators.empty()
                ? "none"
                : join(report.group_generators, ", ")) +
           "\n";
  if (report.brackets) {
    out += "brackets:\n";
    for (const auto& row : *report.brackets) out += "  " + row + "\n";
  }
  return out;
}

bool SweepResult::all_agree() const {
  for (const auto& row : rows)
    if (row.agree && !*row.agree) return false;
  return true;
}

namespace {

long long pow3(int n) {
  long long out = 1;
  for (int i = 0; i < n; ++i) out *= 3;
  return out;
}

// ternary digits in the value order (0, 1, -1), w1 most significant
OmegaSequence sweep_sequence(int N, long long index) {
  static const Rational kDigits[3] = {Rational(0), Rational(1), Rational(-1)};
  std::vector<Rational> w(static_cast<size_t>(N));
  for (int i = N - 1; i >= 0; --i) {
    w[static_cast<size_t>(i)] = kDigits[index % 3];
    index /= 3;
  }
  return OmegaSequence(std::move(w));
}

SweepRow evaluate_row(const OmegaSequence& seq, bool with_oracle) {
  SweepRow row{seq};
  std::string display = display_name(seq);
  if (!display.empty()) row.name = display;
  row.formula = h2_dimension_formula(seq);
  if (with_oracle) {
    row.h2 = h2_dimension(structure_table(seq));
    row.agree = (*row.h2 == row.formula);
  }
  return row;
}

} // namespace

SweepResult run_sweep(int N, bool with_oracle, bool parallel) {
  if (N < 2) throw std::invalid_argument("sweep needs N >= 2");
  const long long total = pow3(N);
  std::vector<std::optional<SweepRow>> slots(static_cast<size_t>(total));

  auto worker = [&](long long first, long long stride) {
    for (long long i = first; i < total; i += stride)
      slots[static_cast<size_t>(i)] =
          evaluate_row(sweep_sequence(N, i), with_oracle);
  };

  if (parallel) {
    unsigned hw = std::thread::hardware_concurrency();
    long long stripes = std::min<long long>(hw == 0 ? 4 : hw, total);
    std::vector<std::thread> threads;
    for (long long k = 0; k < stripes; ++k)
      threads.emplace_back(worker, k, stripes);
    for (auto& t : threads) t.join();
  } else {
    worker(0, 1);
  }

  SweepResult out;
  out.n = N;
  out.rows.reserve(static_cast<size_t>(total));
  int agreements = 0;
  for (auto& slot : slots) {
    const SweepRow& row = *slot;
    if (row.agree && *row.agree) ++agreements;
    out.max_h2 = std::max(out.max_h2, row.h2 ? *row.h2 : row.formula);
    out.rows.push_back(std::move(*slot));
  }
  if (with_oracle) out.agreements = agreements;
  return out;
}

nlohmann::json sweep_to_json(const SweepResult& sweep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : sweep.rows) {
    nlohmann::json r;
    r["omega"] = omega_json(row.sequence);
    r["name"] = opt_json(row.name);
    r["formula"] = row.formula;
    r["h2"] = opt_json(row.h2);
    r["agree"] = opt_json(row.agree);
    rows.push_back(std::move(r));
  }
  nlohmann::json j;
  j["n"] = sweep.n;
  j["rows"] = std::move(rows);
  j["summary"] = {{"count", sweep.rows.size()},
                  {"agreements", opt_json(sweep.agreements)},
                  {"max_h2", sweep.max_h2}};
  return j;
}

std::string sweep_to_text(const SweepResult& sweep) {
  std::string out = "sweep N=" + std::to_string(sweep.n) + ": " +
                    std::to_string(sweep.rows.size()) +
                    " standardized sequences\n";
  for (const auto& row : sweep.rows) {
    out += sequence_text(row.sequence);
    out += "  formula=" + std::to_string(row.formula);
    out += "  h2=" + (row.h2 ? std::to_string(*row.h2) : std::string("-"));
    out += "  agree=";
    out += row.agree ? (*row.agree ? "yes" : "NO") : "-";
    if (row.name) out += "  name=" + *row.name;
    out += "\n";
  }
  out += "summary: sequences=" + std::to_string(sweep.rows.size());
  out += "  agreements=" +
         (sweep.agreements ? std::to_string(*sweep.agreements)
                           : std::string("-"));
  out += "  max_h2=" + std::to_string(sweep.max_h2) + "\n";
  return out;
}

std::string render_classification_table(bool unicode) {
  const int N = 4;
  // the 16 zero-position subsets, ordered by contraction count then
  // positions; sign choices inside a class share the same extension data
  std::vector<std::vector<int>> classes;
  for (int mask = 0; mask < (1 << N); ++mask) {
    std::vector<int> zeros;
    for (int i = 1; i <= N; ++i)
      if (mask & (1 << (i - 1))) zeros.push_back(i);
    classes.push_back(std::move(zeros));
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  const std::string omega = unicode ? "ω" : "omega";
  std::string out = "central extensions of the N=4 family by zero pattern\n";
  out += "#zeros  (pattern)  [type II; type III]  dim II+III\n";
  for (const auto& zeros : classes) {
    std::vector<Rational> w(N, Rational(1));
    std::string pattern = "(";
    for (int i = 1; i <= N; ++i) {
      if (i > 1) pattern += ",";
      if (std::find(zeros.begin(), zeros.end(), i) != zeros.end()) {
        w[static_cast<size_t>(i - 1)] = 0;
        pattern += "0";
      } else {
        pattern += omega + "_" + std::to_string(i);
      }
    }
    pattern += ")";

    const OmegaSequence rep{std::move(w)};
    std::vector<std::string> type2, type3;
    for (const auto& coef : classify_nontrivial(rep))
      (coef.kind == CoefKind::TypeIII_beta ? type3 : type2)
          .push_back(coef.name(unicode));

    std::string dims =
        type2.empty() && type3.empty()
            ? "0"
            : std::to_string(type2.size()) + "+" + std::to_string(type3.size());
    std::string list = "[" + join(type2, ",") +
                       (type3.empty() ? "" : ";" + join(type3, ",")) + "]";
    out += std::to_string(zeros.size()) + "  " + pattern + "  " + list +
           "  " + dims + "\n";
  }
  return out;
}

std::string render_diagram(const OmegaSequence& seq, bool unicode) {
  const int N = seq.n();
  if (N > 9) throw std::invalid_argument("diagram supports N <= 9 only");

  const std::string stem = unicode ? "Ω_{" : "Omega_{";
  // every label is two digits wide here, so cells line up by construction;
  // the length is in display columns, not bytes
  const size_t cell_len = (unicode ? 4 : 8) + 2;
  auto cell = [&](int a, int b) {
    return stem + GeneratorPair(a, b).label() + "}";
  };

  std::string out;
  for (int a = 0; a <= N - 1; ++a) {
    std::string line;
    for (int b = 1; b <= N; ++b) {
      const bool boundary = seq.omega(b) == 0;
      if (b <= a)
        line += std::string((boundary ? 2 : 0) + cell_len + 2, ' ');
      else {
        if (boundary) line += "| ";
        line += cell(a, b) + "  ";
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }

  const OmegaSequence standardized = seq.standardized();
  std::string display = display_name(standardized);
  if (!display.empty()) out += "name: " + display + "\n";

  const std::string omega = unicode ? "ω" : "omega";
  for (int a = 1; a <= N; ++a)
    if (seq.omega(a) == 0)
      out += omega + "_" + std::to_string(a) +
             " = 0: semidirect boundary before column " + std::to_string(a) +
             "\n";

  for (const auto& coef : classify_nontrivial(seq)) {
    out += coef.name(unicode) + ": ";
    switch (coef.kind) {
      case CoefKind::TypeIIF:
        out += "horizontal link " + cell(coef.i - 1, coef.i) + " -- " +
               cell(coef.i - 1, coef.j);
        break;
      case CoefKind::TypeIIL:
        out += "vertical link " + cell(coef.i, coef.j + 1) + " -- " +
               cell(coef.j, coef.j + 1);
        break;
      default:
        out += "long-range link " + cell(coef.i - 1, coef.i) + " -- " +
               cell(coef.j - 1, coef.j);
        break;
    }
    out += "\n";
  }
  return out;
}

} // namespace ck
