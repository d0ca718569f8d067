#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sonckit/circuit.hpp"
#include "sonckit/form.hpp"
#include "sonckit/geometry.hpp"
#include "sonckit/mediated.hpp"
#include "sonckit/sonc.hpp"

namespace sonckit {

using Json = nlohmann::ordered_json;

enum class Conclusion {
  Sonc,
  NotSonc,
  NonnegativeCircuit,
  NonnegativeCircuitBoundary,
  NotNonnegative,
  Sos,
  NotSos,
};

enum class Certificate { Exact, Numeric };

std::string to_string(Conclusion c);
std::string to_string(Certificate c);

struct Verdict {
  Conclusion conclusion;
  Certificate certificate;
  std::string reason;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// "not SONC (exact; coefficient sums 6 > 3)"
std::string format_verdict(const Verdict& v);

struct PartitionSummary {
  ExponentList squares;
  ExponentList inner;
  ExponentList unused_squares;
  ExponentList vertices;
  std::vector<std::pair<Exponent, std::size_t>> family_sizes;
};

struct CircuitSummary {
  CircuitKind kind = CircuitKind::MonomialSquareSum;
  std::vector<std::pair<Exponent, Rational>> outer;
  std::optional<std::pair<Exponent, Rational>> inner;
  std::vector<Rational> barycentric;
  std::vector<Rational> theta_bases;
  std::vector<Rational> theta_exponents;
  double theta_float = 0.0;
  std::optional<Comparison> comparison;  // |f_beta| against Theta
  bool nonnegative = false;
  bool boundary = false;
  std::optional<bool> sos;
  std::optional<std::vector<Rational>> negative_witness;
  std::optional<ZeroLocusStatus> zero_locus;
  std::optional<int> zero_locus_dimension;
};

struct MediatedSummary {
  ExponentList delta;
  ExponentList star;
  ExponentList mid_delta;
  std::size_t lattice_size = 0;
  SimplexClass classification = SimplexClass::NotSimplicial;
};

struct FeasibilitySummary {
  std::optional<SearchStatus> status;  // absent when the search could not run
  bool exact = false;
  std::optional<double> objective;  // absent without inner terms
  double margin = 0.0;
  double normalized_margin = 0.0;
  int free_params = 0;
  std::vector<std::string> circuits;  // verified decomposition, when exact
  std::string remainder;
  std::string error;
};

struct AnalysisReport {
  int schema = 1;
  std::string form_name;
  std::string form;
  int num_vars = 0;
  int degree = 0;
  bool zero_form = false;
  bool hilbert_case = false;
  std::optional<PartitionSummary> partition;
  std::optional<Exponent> non_square_vertex;
  std::optional<CircuitSummary> circuit;
  std::optional<std::string> not_a_circuit;
  std::optional<NecessaryConditionReport> necessary;
  std::optional<MediatedSummary> mediated;
  std::optional<FeasibilitySummary> feasibility;
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;

  bool has(Conclusion c) const;
  bool has(Conclusion c, Certificate cert) const;
};

struct AnalysisOptions {
  bool search = false;
  bool mediated = false;  // include the maximal mediated set in the report
  SearchBudget budget;
  GeometryOptions geometry;
};

/// n = 2, 2d = 2 or (n, 2d) = (3, 4): every nonnegative form is a sum of squares.
bool is_hilbert_case(int num_vars, int degree);

/// Full pipeline: partition, circuit test, necessary condition with
/// corollary, maximal mediated set for circuits, optional feasibility search.
/// Throws InvariantViolation when contradictory verdicts arise.
AnalysisReport analyze(const SparseForm& f, const AnalysisOptions& options = {});

Json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const Json& j);

std::string format_report(const AnalysisReport& r);

}  // namespace sonckit
