#include "ck/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

// 0 = success and all checks agree, 1 = formula/oracle disagreement,
// 2 = usage, parse or limit error
constexpr int kOk = 0;
constexpr int kDisagreement = 1;
constexpr int kUsage = 2;

int sweep_ceiling() {
  const char* env = std::getenv("CK_MAX_N");
  if (env == nullptr || *env == '\0') return 8;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    std::cerr << "warning: ignoring malformed CK_MAX_N\n";
    return 8;
  }
}

std::optional<ck::OmegaSequence> parse_or_complain(const std::string& text) {
  auto seq = ck::OmegaSequence::parse(text);
  if (!seq)
    std::cerr << "error: expected >= 2 comma-separated rationals, got \""
              << text << "\"\n";
  return seq;
}

int run_analyze(const std::string& omegas, bool as_json, bool brackets,
                bool group_filter, bool unicode) {
  auto seq = parse_or_complain(omegas);
  if (!seq) return kUsage;
  ck::AnalysisOptions opts;
  opts.with_brackets = brackets;
  opts.unicode = unicode;
  const ck::AnalysisReport report = ck::analyze_sequence(*seq, opts);
  if (as_json)
    std::cout << ck::report_to_json(report).dump(2) << "\n";
  else
    std::cout << ck::report_to_text(report, group_filter);
  return report.agree.value_or(true) ? kOk : kDisagreement;
}

int run_sweep(int n, bool as_json, bool no_oracle, bool parallel) {
  const int ceiling = sweep_ceiling();
  if (n < 2 || n > ceiling) {
    std::cerr << "error: sweep supports 2 <= N <= " << ceiling
              << " (ceiling from CK_MAX_N)\n";
    return kUsage;
  }
  const ck::SweepResult sweep = ck::run_sweep(n, !no_oracle, parallel);
  if (as_json)
    std::cout << ck::sweep_to_json(sweep).dump(2) << "\n";
  else
    std::cout << ck::sweep_to_text(sweep);
  return sweep.all_agree() ? kOk : kDisagreement;
}

int run_table(int n, bool unicode) {
  if (n != 4) {
    std::cerr << "error: the classification table is rendered for N=4 only\n";
    return kUsage;
  }
  std::cout << ck::render_classification_table(unicode);
  return kOk;
}

int run_diagram(const std::string& omegas, bool unicode) {
  auto seq = parse_or_complain(omegas);
  if (!seq) return kUsage;
  if (seq->n() > 9) {
    std::cerr << "error: diagram rendering is limited to N <= 9\n";
    return kUsage;
  }
  std::cout << ck::render_diagram(*seq, unicode);
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-Klein algebras: central extensions and H^2, "
               "by exact oracle and closed form"};
  app.require_subcommand(1);

  std::string omegas;
  int sweep_n = 2;
  int table_n = 4;
  bool as_json = false, brackets = false, group_filter = false;
  bool no_oracle = false, parallel = false, unicode = false;

  auto* analyze = app.add_subcommand(
      "analyze", "Full report on one algebra (name, dims, coefficients)");
  analyze->add_option("omegas", omegas, "comma-separated rationals, N >= 2")
      ->required();
  analyze->add_flag("--json", as_json, "machine-readable report");
  analyze->add_flag("--brackets", brackets,
                    "include the extended commutator table");
  analyze->add_flag("--group-filter", group_filter,
                    "show the group-level coefficient list");
  analyze->add_flag("--unicode", unicode, "Greek symbols in output");

  auto* sweep = app.add_subcommand(
      "sweep", "Evaluate every standardized sequence of length N");
  sweep->add_option("N", sweep_n, "sequence length")->required();
  sweep->add_flag("--json", as_json, "machine-readable rows");
  sweep->add_flag("--no-oracle", no_oracle,
                  "skip the linear-algebra computation, formula only");
  sweep->add_flag("--parallel", parallel, "evaluate rows concurrently");

  auto* table = app.add_subcommand(
      "table", "Classification of the N=4 family by zero pattern");
  table->add_option("--n", table_n, "sequence length (4 only)");
  table->add_flag("--unicode", unicode, "Greek symbols in output");

  auto* diagram = app.add_subcommand(
      "diagram", "Triangular generator array with extension links");
  diagram->add_option("omegas", omegas, "comma-separated rationals, N >= 2")
      ->required();
  diagram->add_flag("--unicode", unicode, "Greek symbols in output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (app.got_subcommand(analyze))
      return run_analyze(omegas, as_json, brackets, group_filter, unicode);
    if (app.got_subcommand(sweep))
      return run_sweep(sweep_n, as_json, no_oracle, parallel);
    if (app.got_subcommand(table)) return run_table(table_n, unicode);
    if (app.got_subcommand(diagram)) return run_diagram(omegas, unicode);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
