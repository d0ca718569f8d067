#include "sonckit/corpus.hpp"

#include <algorithm>
#include <iomanip>
#include <regex>
#include <sstream>

#include "sonckit/grid.hpp"
#include "sonckit/linalg.hpp"
#include "sonckit/parallel.hpp"

namespace sonckit {

namespace {

SparseForm var(int n, int i) { return SparseForm::variable(n, i); }
Rational frac(long a, long b) { return make_rational(Integer(a), Integer(b)); }

}  // namespace

SparseForm motzkin_form() {
  const auto x = var(3, 1), y = var(3, 2), z = var(3, 3);
  return (pow(x, 4) * pow(y, 2) + pow(x, 2) * pow(y, 4) - Rational(3) * pow(x * y * z, 2) + pow(z, 6))
      .with_name("motzkin");
}

SparseForm motzkin_modified_form() {
  const auto x = var(3, 1), y = var(3, 2), z = var(3, 3);
  return (pow(z, 6) - pow(x * y * z, 2) + pow(x, 4) * pow(y, 2) + pow(x, 2) * pow(y, 4)).with_name("motzkin_modified");
}

SparseForm robinson1_form() {
  const auto x = var(3, 1), y = var(3, 2), z = var(3, 3);
  const auto x2 = pow(x, 2), y2 = pow(y, 2), z2 = pow(z, 2);
  const auto mixed = pow(x, 4) * y2 + pow(x, 4) * z2 + pow(y, 4) * x2 + pow(y, 4) * z2 + pow(z, 4) * x2 + pow(z, 4) * y2;
  return (pow(x, 6) + pow(y, 6) + pow(z, 6) - mixed + Rational(3) * x2 * y2 * z2).with_name("robinson1");
}

SparseForm robinson2_form() {
  const auto x = var(4, 1), y = var(4, 2), z = var(4, 3), w = var(4, 4);
  return (pow(x, 2) * pow(x - w, 2) + pow(y, 2) * pow(y - w, 2) + pow(z, 2) * pow(z - w, 2) +
          Rational(2) * x * y * z * (x + y + z - Rational(2) * w))
      .with_name("robinson2");
}

SparseForm choi_lam_q1_form() {
  const auto x = var(4, 1), y = var(4, 2), z = var(4, 3), w = var(4, 4);
  return (pow(x * y, 2) + pow(x * z, 2) + pow(y * z, 2) + pow(w, 4) - Rational(4) * w * x * y * z)
      .with_name("choi_lam_q1");
}

SparseForm choi_lam_q2_form() {
  const auto x = var(3, 1), y = var(3, 2), z = var(3, 3);
  return (pow(x, 4) * pow(y, 2) + pow(y, 4) * pow(z, 2) + pow(z, 4) * pow(x, 2) - Rational(3) * pow(x * y * z, 2))
      .with_name("choi_lam_q2");
}

SparseForm schmuedgen_form() {
  const auto x = var(3, 1), y = var(3, 2), z = var(3, 3);
  const auto z2 = pow(z, 2);
  const auto a = pow(x, 3) - Rational(4) * x * z2;
  const auto b = pow(y, 3) - Rational(4) * y * z2;
  const auto tail = (pow(y, 2) - pow(x, 2)) * x * (x + Rational(2) * z) *
                    (x * (x - Rational(2) * z) + Rational(2) * (pow(y, 2) - Rational(4) * z2));
  return (Rational(200) * (pow(a, 2) + pow(b, 2)) + tail).with_name("schmuedgen");
}

SparseForm p_family_form(int n, int two_d) {
  if (n < 2 || two_d < 4 || two_d % 2 != 0) throw DimensionMismatch("p family needs n >= 2 and even degree >= 4");
  const unsigned d = static_cast<unsigned>(two_d / 2);
  const auto xn = var(n, n);
  SparseForm sum = SparseForm::zero(n, two_d);
  for (int i = 1; i < n; ++i) {
    const auto xi = var(n, i);
    const auto inner = pow(xi, d - 2) * pow(xn, 2) + Rational(2) * pow(xi, d - 1) * xn + pow(xi, d);
    sum = sum + pow(inner, 2);
  }
  return sum.with_name("p_" + std::to_string(n) + "_" + std::to_string(two_d));
}

SparseForm q_family_form(int n, int two_d) {
  if (n < 3 || two_d < 4 || two_d % 2 != 0) throw DimensionMismatch("q family needs n >= 3 and even degree >= 4");
  const unsigned two_d_u = static_cast<unsigned>(two_d);
  const auto x1 = var(n, 1), x2 = var(n, 2), xn = var(n, n);
  SparseForm sum = pow(x1 * xn + x2 * xn + x1 * x2, 2) * pow(xn, two_d_u - 4);
  for (int i = 3; i < n; ++i) sum = sum + pow(var(n, i), two_d_u);
  return sum.with_name("q_" + std::to_string(n) + "_" + std::to_string(two_d));
}

SparseForm square_satisfying_necessary_form() {
  const auto x = var(3, 1), y = var(3, 2), z = var(3, 3);
  const auto inner = Rational(2) * pow(x * z, 2) + Rational(2) * pow(x * y, 2) - frac(1, 2) * pow(y * z, 2);
  return pow(inner, 2).with_name("square_satisfying_necessary");
}

SparseForm separator_ternary_form() {
  const auto x = var(3, 1), y = var(3, 2), z = var(3, 3);
  const auto s = pow(z, 3) + Rational(2) * x * y * z + pow(x, 2) * y;
  return (frac(1, 2) * pow(s, 2) + motzkin_form()).with_name("separator_ternary");
}

SparseForm separator_quaternary_form() {
  const auto x = var(4, 1), y = var(4, 2), z = var(4, 3), w = var(4, 4);
  return (pow(x * y + x * z + y * z, 2) + pow(w, 4) + choi_lam_q1_form()).with_name("separator_quaternary");
}

RationalMatrix motzkin_transform_matrix() {
  RationalMatrix a(3, 3);
  a << 1, 0, -1, 0, 1, -1, 0, 0, 1;
  return a;
}

RationalMatrix choi_lam_q1_transform_matrix() {
  RationalMatrix b(4, 4);
  b << 1, 0, 0, -1, 0, 1, 0, -1, 0, 0, 1, 1, 0, 0, 0, 1;
  return b;
}

SparseForm motzkin_transformed_form() {
  return substitute_linear(motzkin_form(), motzkin_transform_matrix()).with_name("motzkin_transformed");
}

SparseForm choi_lam_q1_transformed_form() {
  return substitute_linear(choi_lam_q1_form(), choi_lam_q1_transform_matrix()).with_name("choi_lam_q1_transformed");
}

// ---- lazily computed context ------------------------------------------------

const SupportPartition& CorpusContext::partition() {
  if (!partition_) partition_ = support_partition(form_);
  return *partition_;
}

const NecessaryConditionReport& CorpusContext::necessary() {
  if (!necessary_) necessary_ = necessary_condition(form_, partition());
  return *necessary_;
}

const std::optional<Circuit>& CorpusContext::circuit() {
  if (!circuit_) circuit_ = as_circuit(form_);
  return *circuit_;
}

const MediatedSet& CorpusContext::mediated_set() {
  if (!mediated_) {
    if (!circuit()) throw Error(form_.name() + " is not a circuit");
    const auto outer = circuit()->outer_exponents();
    mediated_ = maximal_mediated_set(ExponentSet(outer.begin(), outer.end()));
  }
  return *mediated_;
}

const SearchOutcome& CorpusContext::search() {
  if (!search_) search_ = sonc_feasibility_search(form_, partition());
  return *search_;
}

const AnalysisReport& CorpusContext::report() {
  if (!report_) report_ = analyze(form_);
  return *report_;
}

const AnalysisReport& CorpusContext::searched_report() {
  if (!searched_report_) {
    AnalysisOptions options;
    options.search = true;
    searched_report_ = analyze(form_, options);
  }
  return *searched_report_;
}

// ---- probes -----------------------------------------------------------------

namespace {

using Probe = std::function<std::string(CorpusContext&)>;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string exponent_list_string(const ExponentList& list) {
  std::string s;
  for (const auto& e : list) s += (s.empty() ? "" : " ") + monomial_string(e);
  return s;
}

// SONC status as reported by the analysis verdicts.
std::string sonc_status(const AnalysisReport& r) {
  if (r.has(Conclusion::NotSonc, Certificate::Exact)) return "not SONC (exact)";
  if (r.has(Conclusion::Sonc, Certificate::Exact)) return "SONC (exact)";
  if (r.has(Conclusion::NotSonc, Certificate::Numeric)) return "not SONC (numeric)";
  if (r.has(Conclusion::Sonc, Certificate::Numeric)) return "SONC (numeric)";
  return "undecided";
}

std::string necessary_summary(const NecessaryConditionReport& n) {
  return to_string(n.inner_sum) + " vs " + to_string(n.outer_sum) + ": " + to_string(n.verdict);
}

Probe necessary_probe() {
  return [](CorpusContext& c) { return necessary_summary(c.necessary()); };
}

Probe status_probe() {
  return [](CorpusContext& c) { return sonc_status(c.report()); };
}

Probe searched_status_probe() {
  return [](CorpusContext& c) { return sonc_status(c.searched_report()); };
}

Probe corollary_count_probe() {
  return [](CorpusContext& c) {
    const auto& n = c.necessary();
    return n.corollary ? std::to_string(n.corollary->violations.size()) : std::string("not run");
  };
}

Probe corollary_pair_probe(Exponent alpha, Exponent beta) {
  return [alpha, beta](CorpusContext& c) -> std::string {
    const auto& n = c.necessary();
    if (!n.corollary) return "not run";
    for (const auto& v : n.corollary->violations) {
      if (v.alpha != alpha || v.beta != beta) continue;
      auto sorted = v.lambdas;
      std::sort(sorted.begin(), sorted.end());
      std::string lambdas;
      for (const auto& l : sorted) lambdas += (lambdas.empty() ? "" : ", ") + to_string(l);
      return to_string(v.coefficient) + " < " + to_string(v.bound) + " (lambda " + lambdas + ")";
    }
    return "none";
  };
}

Probe circuit_probe() {
  return [](CorpusContext& c) -> std::string {
    const auto& circ = c.circuit();
    if (!circ) return "not a circuit";
    std::string s = to_string(circ->kind);
    if (circ->inner) {
      s += " beta " + to_string(circ->inner->first) + " lambda";
      for (const auto& l : circ->barycentric) s += " " + to_string(l);
    }
    return s;
  };
}

Probe theta_probe() {
  return [](CorpusContext& c) -> std::string {
    const auto& circ = c.circuit();
    if (!circ || !circ->inner) return "n/a";
    return to_string(compare_circuit_number(circuit_number(*circ), abs(circ->inner->second)));
  };
}

Probe nonnegativity_probe() {
  return [](CorpusContext& c) -> std::string {
    const auto& circ = c.circuit();
    if (!circ) return "n/a";
    const auto nn = decide_circuit_nonnegativity(*circ);
    if (!nn.nonnegative) return "NotNonnegative";
    return nn.boundary ? "Nonnegative (boundary)" : "Nonnegative";
  };
}

Probe mediated_probe() {
  return [](CorpusContext& c) -> std::string {
    const auto& m = c.mediated_set();
    const auto& circ = c.circuit();
    return to_string(m.classification) + ", |star| = " + std::to_string(m.star.size()) +
           ", beta in star: " + yes_no(m.star.count(circ->inner->first) > 0);
  };
}

Probe sos_probe() {
  return [](CorpusContext& c) -> std::string {
    const auto& circ = c.circuit();
    if (!circ) return "n/a";
    return yes_no(circuit_is_sos(*circ, c.mediated_set()));
  };
}

Probe search_probe() {
  return [](CorpusContext& c) {
    const auto& s = c.search();
    std::string out = to_string(s.status);
    if (s.status == SearchStatus::Feasible) out += s.exact ? " (exact)" : " (numeric)";
    return out;
  };
}

Probe margin_at_least_probe(double bound) {
  return [bound](CorpusContext& c) { return yes_no(c.search().margin >= bound); };
}

Probe grid_zeros_probe(NamedGrid g) {
  return [g](CorpusContext& c) { return std::to_string(evaluate_grid(c.form(), g).zeros); };
}

Probe grid_nonzero_probe(NamedGrid g) {
  return [g](CorpusContext& c) {
    std::string s;
    for (const auto& e : evaluate_grid(c.form(), g).entries)
      if (e.value != 0) s += (s.empty() ? "" : " ") + point_string(e.point) + "=" + to_string(e.value);
    return s.empty() ? std::string("none") : s;
  };
}

Probe vertices_probe() {
  return [](CorpusContext& c) {
    const auto v = hull_vertices(c.form().support());
    return exponent_list_string(ExponentList(v.begin(), v.end()));
  };
}

Probe half_newton_probe() {
  return [](CorpusContext& c) {
    const auto h = half_newton_support(c.form());
    return exponent_list_string(ExponentList(h.begin(), h.end()));
  };
}

Probe inverse_substitution_probe(RationalMatrix a, std::function<SparseForm()> original) {
  return [a, original](CorpusContext& c) {
    return yes_no(substitute_linear(c.form(), exact_inverse<Rational>(a)) == original());
  };
}

Probe zero_locus_probe() {
  return [](CorpusContext& c) -> std::string {
    const auto& circ = c.circuit();
    if (!circ) return "n/a";
    const auto zl = zero_locus(*circ);
    std::string s = to_string(zl.status);
    if (zl.locus) s += ", dimension " + std::to_string(zl.locus->dimension);
    return s;
  };
}

// Verdict of the coefficient-sum test after a reduction step, in the same
// vocabulary as sonc_status.
Probe reduction_probe(std::function<SparseForm(const SparseForm&)> reduce) {
  return [reduce](CorpusContext& c) { return sonc_status(analyze(reduce(c.form()))); };
}

SparseForm embed_one(const SparseForm& f) { return embed_variables(f, 1); }
SparseForm shift_last(const SparseForm& f) { return multiply_monomial_square(f, f.num_vars(), 1); }

std::vector<CorpusEntry> make_corpus() {
  const std::string motzkin_ref = "Motzkin 1967";
  const std::string bcj_ref = "Berg-Christensen-Jensen 1979";
  const std::string robinson_ref = "Robinson 1969";
  const std::string choi_lam_ref = "Choi-Lam 1977";
  const std::string schmuedgen_ref = "Schmuedgen 1979";
  const std::string derived = "derived: exact computation";

  std::vector<CorpusEntry> c;
  c.push_back({"motzkin", motzkin_form(), motzkin_ref,
               {{"circuit", "ProperCircuit beta (2,2,2) lambda 1/3 1/3 1/3", circuit_probe()},
                {"theta_vs_inner", "Equal", theta_probe()},
                {"nonnegativity", "Nonnegative (boundary)", nonnegativity_probe()},
                {"mediated_set", "MSimplex, |star| = 6, beta in star: no", mediated_probe()},
                {"sos", "no", sos_probe()},
                {"necessary", "3 vs 3: Equality", necessary_probe()},
                {"corollary_violations", "0", corollary_count_probe()},
                {"zero_locus", "Locus, dimension 1", zero_locus_probe()},
                {"search", "Feasible (exact)", search_probe()},
                {"status", "SONC (exact)", status_probe()}}});
  c.push_back({"motzkin_modified", motzkin_modified_form(), bcj_ref,
               {{"circuit", "ProperCircuit beta (2,2,2) lambda 1/3 1/3 1/3", circuit_probe()},
                {"nonnegativity", "Nonnegative", nonnegativity_probe()},
                {"sos", "no", sos_probe()},
                {"search", "Feasible (exact)", search_probe()},
                {"status", "SONC (exact)", status_probe()}}});
  c.push_back({"robinson1", robinson1_form(), robinson_ref,
               {{"necessary", "6 vs 3: Violated", necessary_probe()},
                {"status", "not SONC (exact)", status_probe()},
                {"grid_X_zeros", "8", grid_zeros_probe(NamedGrid::X)},
                {"grid_X_nonzero", "(0,0,1)=1", grid_nonzero_probe(NamedGrid::X)},
                {"embed_status", "not SONC (exact)", reduction_probe(embed_one)},
                {"square_shift_status", "not SONC (exact)", reduction_probe(shift_last)}}});
  c.push_back({"robinson2", robinson2_form(), robinson_ref,
               {{"necessary", "16 vs 6: Violated", necessary_probe()},
                {"status", "not SONC (exact)", status_probe()},
                {"grid_Y_zeros", "7", grid_zeros_probe(NamedGrid::Y)},
                {"grid_Y_nonzero", "(1,1,1,1)=2", grid_nonzero_probe(NamedGrid::Y)},
                {"embed_status", "not SONC (exact)", reduction_probe(embed_one)},
                {"square_shift_status", "not SONC (exact)", reduction_probe(shift_last)}}});
  c.push_back({"choi_lam_q1", choi_lam_q1_form(), choi_lam_ref,
               {{"circuit", "ProperCircuit beta (1,1,1,1) lambda 1/4 1/4 1/4 1/4", circuit_probe()},
                {"nonnegativity", "Nonnegative (boundary)", nonnegativity_probe()},
                {"sos", "no", sos_probe()},
                {"status", "SONC (exact)", status_probe()}}});
  c.push_back({"choi_lam_q2", choi_lam_q2_form(), choi_lam_ref,
               {{"circuit", "ProperCircuit beta (2,2,2) lambda 1/3 1/3 1/3", circuit_probe()},
                {"nonnegativity", "Nonnegative (boundary)", nonnegativity_probe()},
                {"sos", "no", sos_probe()},
                {"status", "SONC (exact)", status_probe()}}});
  c.push_back({"schmuedgen", schmuedgen_form(), schmuedgen_ref,
               {{"grid_Xprime_zeros", "8", grid_zeros_probe(NamedGrid::Xprime)},
                {"grid_Xprime_nonzero", "(2,0,1)=256", grid_nonzero_probe(NamedGrid::Xprime)},
                {"necessary_inconclusive", "yes",
                 [](CorpusContext& ctx) {
                   const auto& n = ctx.necessary();
                   return yes_no(n.verdict != NecessaryVerdict::Violated &&
                                 (!n.corollary || n.corollary->violations.empty()));
                 }}}});
  c.push_back({"p_2_6", p_family_form(2, 6), derived,
               {{"necessary", "8 vs 8: Equality", necessary_probe()},
                {"corollary_pair", "1 < 2 (lambda 1/2, 3/4)",
                 corollary_pair_probe(make_exponent({2, 4}), make_exponent({3, 3}))},
                {"status", "not SONC (exact)", status_probe()},
                {"embed_status", "not SONC (exact)", reduction_probe(embed_one)},
                {"square_shift_status", "not SONC (exact)", reduction_probe(shift_last)}}});
  for (const auto& [n, two_d] : {std::pair{3, 6}, std::pair{3, 8}}) {
    c.push_back({"p_" + std::to_string(n) + "_" + std::to_string(two_d), p_family_form(n, two_d), derived,
                 {{"status", "not SONC (exact)", status_probe()},
                  {"embed_status", "not SONC (exact)", reduction_probe(embed_one)},
                  {"square_shift_status", "not SONC (exact)", reduction_probe(shift_last)}}});
  }
  c.push_back({"q_3_6", q_family_form(3, 6), derived,
               {{"necessary", "6 vs 3: Violated", necessary_probe()},
                {"status", "not SONC (exact)", status_probe()},
                {"embed_status", "not SONC (exact)", reduction_probe(embed_one)},
                {"square_shift_status", "not SONC (exact)", reduction_probe(shift_last)}}});
  c.push_back({"q_3_8", q_family_form(3, 8), derived,
               {{"status", "not SONC (exact)", status_probe()},
                {"embed_status", "not SONC (exact)", reduction_probe(embed_one)},
                {"square_shift_status", "not SONC (exact)", reduction_probe(shift_last)}}});
  c.push_back({"square_satisfying_necessary", square_satisfying_necessary_form(), derived,
               {{"necessary", "4 vs 33/4: StrictlySatisfied", necessary_probe()},
                {"search", "InfeasibleWithMargin", search_probe()},
                {"search_margin_at_least_half", "yes", margin_at_least_probe(0.5)},
                {"status_with_search", "not SONC (numeric)", searched_status_probe()}}});
  c.push_back({"separator_ternary", separator_ternary_form(), derived,
               {{"necessary", "6 vs 4: Violated", necessary_probe()},
                {"half_newton_support", "x1^2*x2 x1*x2^2 x1*x2*x3 x3^3", half_newton_probe()},
                {"status", "not SONC (exact)", status_probe()}}});
  c.push_back({"separator_quaternary", separator_quaternary_form(), derived,
               {{"necessary", "10 vs 8: Violated", necessary_probe()},
                {"status", "not SONC (exact)", status_probe()}}});
  c.push_back({"motzkin_transformed", motzkin_transformed_form(), derived,
               {{"vertices", "x1^4*x2^2 x1^4*x3^2 x1^2*x2^4 x1^2*x3^4 x2^4*x3^2 x2^2*x3^4", vertices_probe()},
                {"inverse_substitution", "yes", inverse_substitution_probe(motzkin_transform_matrix(), motzkin_form)}}});
  c.push_back({"choi_lam_q1_transformed", choi_lam_q1_transformed_form(), derived,
               {{"vertices", "x1^2*x2^2 x1^2*x3^2 x1^2*x4^2 x2^2*x3^2 x2^2*x4^2 x3^2*x4^2", vertices_probe()},
                {"inverse_substitution", "yes",
                 inverse_substitution_probe(choi_lam_q1_transform_matrix(), choi_lam_q1_form)}}});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = make_corpus();
  return corpus;
}

std::vector<CorpusRow> run_corpus(const std::optional<std::string>& filter) {
  std::vector<const CorpusEntry*> selected;
  std::optional<std::regex> re;
  if (filter) re.emplace(*filter);
  for (const auto& e : builtin_corpus())
    if (!re || std::regex_search(e.name, *re)) selected.push_back(&e);

  std::vector<std::vector<CorpusRow>> per_entry(selected.size());
  parallel_for(selected.size(), [&](std::size_t i) {
    const CorpusEntry& entry = *selected[i];
    CorpusContext ctx(entry.form);
    for (const auto& check : entry.checks) {
      CorpusRow row{entry.name, check.name, check.expected, {}, entry.provenance, false};
      try {
        row.got = check.probe(ctx);
      } catch (const InvariantViolation&) {
        throw;
      } catch (const Error& e) {
        row.got = std::string("error: ") + e.what();
      }
      row.pass = row.got == row.expected;
      per_entry[i].push_back(std::move(row));
    }
  });
  std::vector<CorpusRow> rows;
  for (auto& v : per_entry)
    for (auto& r : v) rows.push_back(std::move(r));
  return rows;
}

std::string format_corpus_table(const std::vector<CorpusRow>& rows) {
  std::size_t w_entry = 5, w_check = 5, w_expected = 8, w_got = 3;
  for (const auto& r : rows) {
    w_entry = std::max(w_entry, r.entry.size());
    w_check = std::max(w_check, r.check.size());
    w_expected = std::max(w_expected, r.expected.size());
    w_got = std::max(w_got, r.got.size());
  }
  std::ostringstream out;
  auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                  const std::string& e, const std::string& f) {
    out << std::left << std::setw(static_cast<int>(w_entry)) << a << "  " << std::setw(static_cast<int>(w_check)) << b
        << "  " << std::setw(static_cast<int>(w_expected)) << c << "  " << std::setw(static_cast<int>(w_got)) << d
        << "  " << std::setw(4) << e << "  " << f << "\n";
  };
  line("entry", "check", "expected", "got", "", "citation");
  std::size_t failures = 0;
  for (const auto& r : rows) {
    line(r.entry, r.check, r.expected, r.got, r.pass ? "ok" : "FAIL", r.provenance);
    if (!r.pass) ++failures;
  }
  out << rows.size() << " checks, " << failures << " failed\n";
  return out.str();
}

Json corpus_json(const std::vector<CorpusRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back({{"entry", r.entry},
                 {"check", r.check},
                 {"expected", r.expected},
                 {"got", r.got},
                 {"pass", r.pass},
                 {"citation", r.provenance}});
  return Json{{"schema", 1}, {"rows", a}};
}

}  // namespace sonckit
