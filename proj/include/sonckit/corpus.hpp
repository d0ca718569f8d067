#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sonckit/circuit.hpp"
#include "sonckit/form.hpp"
#include "sonckit/geometry.hpp"
#include "sonckit/mediated.hpp"
#include "sonckit/report.hpp"
#include "sonckit/sonc.hpp"

namespace sonckit {

// Classical forms, built exactly by form arithmetic.
SparseForm motzkin_form();
SparseForm motzkin_modified_form();
SparseForm robinson1_form();
SparseForm robinson2_form();
SparseForm choi_lam_q1_form();
SparseForm choi_lam_q2_form();
SparseForm schmuedgen_form();
/// sum_{i<n} (x_i^{d-2} x_n^2 + 2 x_i^{d-1} x_n + x_i^d)^2, degree 2d.
SparseForm p_family_form(int n, int two_d);
/// (x1 xn + x2 xn + x1 x2)^2 xn^{2d-4} + sum_{3 <= i < n} x_i^{2d}; needs n >= 3.
SparseForm q_family_form(int n, int two_d);
/// (2 x^2 z^2 + 2 x^2 y^2 - y^2 z^2 / 2)^2: satisfies the coefficient-sum test, not SONC.
SparseForm square_satisfying_necessary_form();
/// (z^3 + 2xyz + x^2 y)^2 / 2 + Motzkin
SparseForm separator_ternary_form();
/// (xy + xz + yz)^2 + w^4 + Q1
SparseForm separator_quaternary_form();
RationalMatrix motzkin_transform_matrix();
RationalMatrix choi_lam_q1_transform_matrix();
SparseForm motzkin_transformed_form();
SparseForm choi_lam_q1_transformed_form();

/// Lazily computed analysis pieces shared by the checks of one entry.
class CorpusContext {
 public:
  explicit CorpusContext(SparseForm form) : form_(std::move(form)) {}

  const SparseForm& form() const { return form_; }
  const SupportPartition& partition();
  const NecessaryConditionReport& necessary();
  const std::optional<Circuit>& circuit();
  const MediatedSet& mediated_set();  // of the circuit's outer exponents
  const SearchOutcome& search();
  const AnalysisReport& report();  // without feasibility search
  const AnalysisReport& searched_report();

 private:
  SparseForm form_;
  std::optional<SupportPartition> partition_;
  std::optional<NecessaryConditionReport> necessary_;
  std::optional<std::optional<Circuit>> circuit_;
  std::optional<MediatedSet> mediated_;
  std::optional<SearchOutcome> search_;
  std::optional<AnalysisReport> report_;
  std::optional<AnalysisReport> searched_report_;
};

struct CorpusCheck {
  std::string name;
  std::string expected;
  std::function<std::string(CorpusContext&)> probe;
};

struct CorpusEntry {
  std::string name;
  SparseForm form;
  std::string provenance;
  std::vector<CorpusCheck> checks;
};

const std::vector<CorpusEntry>& builtin_corpus();

struct CorpusRow {
  std::string entry;
  std::string check;
  std::string expected;
  std::string got;
  std::string provenance;
  bool pass = false;
};

/// Runs the checks of all entries whose name matches the ECMAScript regex
/// (all entries without a filter) on the worker pool; rows come back in
/// corpus order.
std::vector<CorpusRow> run_corpus(const std::optional<std::string>& filter = std::nullopt);

std::string format_corpus_table(const std::vector<CorpusRow>& rows);
Json corpus_json(const std::vector<CorpusRow>& rows);

}  // namespace sonckit
