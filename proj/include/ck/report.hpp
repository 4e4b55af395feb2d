#pragma once

// Analysis reports, sweeps over all standardized sequences, and the text
// artifacts (classification table, generator diagram) exposed by the CLI.

#include "ck/algebra.hpp"
#include "ck/closed_form.hpp"
#include "ck/extension.hpp"
#include "ck/identify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ck {

struct AnalysisOptions {
  bool with_oracle = true;  // run the exact linear-algebra computation
  bool with_brackets = false;
  bool unicode = false;     // affects coefficient and bracket rendering
};

struct AnalysisReport {
  OmegaSequence sequence;
  OmegaSequence standardized;
  std::optional<std::string> name; // display name of the standardized form
  std::optional<int> z2, b2, h2;   // unset when the oracle is skipped
  int formula = 0;
  std::optional<bool> agree;       // h2 == formula; unset with the oracle
  std::vector<std::string> generators;       // nontrivial coefficients
  std::vector<std::string> group_generators; // after the compactness filter
  std::optional<std::vector<std::string>> brackets;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze_sequence(const OmegaSequence& seq,
                                AnalysisOptions opts = {});

nlohmann::json report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(const nlohmann::json& j);
std::string report_to_text(const AnalysisReport& report,
                           bool show_group_filter);

// One evaluated sequence of a sweep.
struct SweepRow {
  OmegaSequence sequence;
  std::optional<std::string> name;
  int formula = 0;
  std::optional<int> h2;
  std::optional<bool> agree;

  bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
  int n = 0;
  std::vector<SweepRow> rows; // ternary order, digits (0, 1, -1), w1 first
  std::optional<int> agreements;
  int max_h2 = 0;

  bool all_agree() const;
};

// Evaluates every standardized sequence of length N. With parallel=true
// rows are computed by a thread stripe but assembled in ternary order, so
// output is identical either way.
SweepResult run_sweep(int N, bool with_oracle = true, bool parallel = false);

nlohmann::json sweep_to_json(const SweepResult& sweep);
std::string sweep_to_text(const SweepResult& sweep);

// The N=4 classification table: the 81 sign choices collapse into 16
// zero-pattern classes; each row shows the pattern, the nontrivial
// coefficients (type II; type III) and the dimension split "II+III".
std::string render_classification_table(bool unicode = false);

// Triangular generator array with the semidirect boundaries of every
// vanishing omega marked and the nontrivial coefficients listed as links.
std::string render_diagram(const OmegaSequence& seq, bool unicode = false);

} // namespace ck
