#include "sonckit/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace sonckit {

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Sonc: return "SONC";
    case Conclusion::NotSonc: return "not SONC";
    case Conclusion::NonnegativeCircuit: return "nonnegative circuit";
    case Conclusion::NonnegativeCircuitBoundary: return "nonnegative circuit (boundary)";
    case Conclusion::NotNonnegative: return "not nonnegative";
    case Conclusion::Sos: return "SOS";
    case Conclusion::NotSos: return "not SOS";
  }
  return "?";
}

std::string to_string(Certificate c) { return c == Certificate::Exact ? "exact" : "numeric"; }

std::string format_verdict(const Verdict& v) {
  return to_string(v.conclusion) + " (" + to_string(v.certificate) + "; " + v.reason + ")";
}

bool AnalysisReport::has(Conclusion c) const {
  return std::any_of(verdicts.begin(), verdicts.end(), [&](const Verdict& v) { return v.conclusion == c; });
}

bool AnalysisReport::has(Conclusion c, Certificate cert) const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [&](const Verdict& v) { return v.conclusion == c && v.certificate == cert; });
}

bool is_hilbert_case(int num_vars, int degree) {
  return num_vars == 2 || degree == 2 || (num_vars == 3 && degree == 4);
}

namespace {

std::string fixed(double x, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

void check_consistency(const AnalysisReport& r) {
  auto clash = [&](Conclusion a, Conclusion b) {
    if (r.has(a) && r.has(b))
      throw InvariantViolation("contradictory verdicts \"" + to_string(a) + "\" and \"" + to_string(b) + "\" for " +
                               (r.form_name.empty() ? r.form : r.form_name));
  };
  clash(Conclusion::Sonc, Conclusion::NotSonc);
  clash(Conclusion::Sos, Conclusion::NotSos);
  clash(Conclusion::NonnegativeCircuit, Conclusion::NotNonnegative);
  clash(Conclusion::NonnegativeCircuitBoundary, Conclusion::NotNonnegative);
}

void analyze_circuit(const Circuit& c, const AnalysisOptions& options, AnalysisReport& r) {
  CircuitSummary s;
  s.kind = c.kind;
  s.outer = c.outer;
  s.inner = c.inner;
  s.barycentric = c.barycentric;
  const auto nonneg = decide_circuit_nonnegativity(c);
  s.nonnegative = nonneg.nonnegative;
  s.boundary = nonneg.boundary;
  auto add = [&](Conclusion con, std::string reason) {
    r.verdicts.push_back({con, Certificate::Exact, std::move(reason)});
  };

  if (c.kind == CircuitKind::MonomialSquareSum) {
    add(Conclusion::Sonc, "sum of monomial squares");
    add(Conclusion::Sos, "sum of monomial squares");
    r.circuit = std::move(s);
    return;
  }

  const auto theta = circuit_number(c);
  s.theta_bases = theta.factor_bases;
  s.theta_exponents = theta.exponents;
  s.theta_float = theta.float_value;
  const Rational abs_beta = abs(c.inner->second);
  s.comparison = compare_circuit_number(theta, abs_beta);
  const std::string beta = to_string(c.inner->first);
  const bool inner_square = c.inner->second > 0 && is_even(c.inner->first);

  if (!nonneg.nonnegative) {
    add(Conclusion::NotNonnegative,
        "circuit with |f_beta| = " + to_string(abs_beta) + " > Theta ~ " + fixed(theta.float_value));
    add(Conclusion::NotSonc, "a SONC form is nonnegative");
    if (auto w = find_negative_witness(c)) s.negative_witness = std::vector<Rational>(w->data(), w->data() + w->size());
    r.circuit = std::move(s);
    return;
  }

  if (inner_square) {
    add(Conclusion::NonnegativeCircuit, "all terms are positive monomial squares");
  } else if (nonneg.boundary) {
    add(Conclusion::NonnegativeCircuitBoundary, "|f_beta| = " + to_string(abs_beta) + " = Theta, exact comparison");
  } else {
    add(Conclusion::NonnegativeCircuit,
        "|f_beta| = " + to_string(abs_beta) + " < Theta ~ " + fixed(theta.float_value) + ", exact comparison");
  }
  add(Conclusion::Sonc, "nonnegative circuit form");

  const auto zl = zero_locus(c);
  s.zero_locus = zl.status;
  if (zl.locus) s.zero_locus_dimension = zl.locus->dimension;

  const auto outer = c.outer_exponents();
  const auto mms = maximal_mediated_set(ExponentSet(outer.begin(), outer.end()));
  s.sos = circuit_is_sos(c, mms);
  if (inner_square) {
    add(Conclusion::Sos, "sum of monomial squares");
  } else if (*s.sos) {
    add(Conclusion::Sos, "beta = " + beta + " lies in the maximal mediated set of the outer exponents");
  } else {
    add(Conclusion::NotSos, "beta = " + beta + " is not in the maximal mediated set of the outer exponents");
  }
  if (options.mediated) {
    MediatedSummary m;
    m.delta.assign(mms.delta.begin(), mms.delta.end());
    m.star.assign(mms.star.begin(), mms.star.end());
    m.mid_delta.assign(mms.mid_delta.begin(), mms.mid_delta.end());
    m.lattice_size = mms.lattice.size();
    m.classification = mms.classification;
    r.mediated = std::move(m);
  }
  r.circuit = std::move(s);
}

}  // namespace

AnalysisReport analyze(const SparseForm& f, const AnalysisOptions& options) {
  AnalysisReport r;
  r.form_name = f.name();
  r.form = format_form(f);
  r.num_vars = f.num_vars();
  r.degree = f.degree();
  r.hilbert_case = is_hilbert_case(f.num_vars(), f.degree());
  if (f.is_zero()) {
    r.zero_form = true;
    r.notes.push_back("zero form");
    return r;
  }

  std::optional<SupportPartition> partition;
  try {
    partition = support_partition(f, options.geometry);
  } catch (const CapExceeded& e) {
    r.notes.push_back(std::string("support partition skipped: ") + e.what());
  }
  if (partition) {
    PartitionSummary p;
    p.squares.assign(partition->s_set.begin(), partition->s_set.end());
    p.inner.assign(partition->i_set.begin(), partition->i_set.end());
    p.unused_squares.assign(partition->r_set.begin(), partition->r_set.end());
    p.vertices.assign(partition->vertices.begin(), partition->vertices.end());
    for (const auto& [beta, family] : partition->simplex_families) p.family_sizes.emplace_back(beta, family.size());
    r.partition = std::move(p);
  }

  const auto precheck = psd_newton_precheck(f);
  if (!precheck.pass) {
    r.non_square_vertex = precheck.witness;
    r.verdicts.push_back({Conclusion::NotNonnegative, Certificate::Exact,
                          "Newton polytope vertex " + to_string(*precheck.witness) + " is not a monomial square"});
    r.verdicts.push_back({Conclusion::NotSonc, Certificate::Exact, "a SONC form is nonnegative"});
  }

  auto detection = detect_circuit(f);
  if (const auto* c = std::get_if<Circuit>(&detection)) {
    analyze_circuit(*c, options, r);
  } else {
    const auto& nc = std::get<NotACircuit>(detection);
    r.not_a_circuit = to_string(nc.reason) + ": " + nc.detail;
  }

  if (partition) {
    const auto report = necessary_condition(f, *partition);
    if (report.verdict == NecessaryVerdict::Violated) {
      if (!report.uncovered_inner.empty()) {
        r.verdicts.push_back({Conclusion::NotSonc, Certificate::Exact,
                              "inner exponent " + to_string(*report.uncovered_inner.begin()) +
                                  " lies in no simplex spanned by monomial squares"});
      } else {
        r.verdicts.push_back({Conclusion::NotSonc, Certificate::Exact,
                              "necessary condition fails: sum |f_beta| = " + to_string(report.inner_sum) + " > " +
                                  to_string(report.outer_sum) + " = sum f_alpha"});
      }
    } else if (report.corollary && !report.corollary->violations.empty()) {
      const auto& v = report.corollary->violations.front();
      r.verdicts.push_back({Conclusion::NotSonc, Certificate::Exact,
                            "equality case: f_alpha = " + to_string(v.coefficient) + " < " + to_string(v.bound) +
                                " = min_k lambda^(k) |f_beta| at alpha = " + to_string(v.alpha) +
                                ", beta = " + to_string(v.beta)});
    }
    r.necessary = report;
  }

  if (options.search && partition) {
    FeasibilitySummary fs;
    try {
      const auto outcome = sonc_feasibility_search(f, *partition, options.budget);
      fs.status = outcome.status;
      fs.exact = outcome.exact;
      if (std::isfinite(outcome.objective)) fs.objective = outcome.objective;
      fs.margin = outcome.margin;
      fs.normalized_margin = outcome.normalized_margin;
      fs.free_params = outcome.free_params;
      if (outcome.decomposition) {
        for (const auto& c : outcome.decomposition->circuits) fs.circuits.push_back(format_form(c.form));
        fs.remainder = format_form(outcome.decomposition->monomial_square_remainder);
      }
      switch (outcome.status) {
        case SearchStatus::Feasible:
          if (outcome.exact)
            r.verdicts.push_back({Conclusion::Sonc, Certificate::Exact,
                                  "verified decomposition into " + std::to_string(fs.circuits.size()) +
                                      " nonnegative circuits"});
          else
            r.verdicts.push_back({Conclusion::Sonc, Certificate::Numeric,
                                  "search objective " + fixed(outcome.objective) + " <= 0, rounding not verified"});
          break;
        case SearchStatus::InfeasibleWithMargin:
          r.verdicts.push_back({Conclusion::NotSonc, Certificate::Numeric,
                                "margin reported: best max(nu |f_beta| - Theta) = " + fixed(outcome.margin)});
          break;
        case SearchStatus::Inconclusive:
          r.notes.push_back("feasibility search inconclusive (margin " + fixed(outcome.margin) + ")");
          break;
      }
    } catch (const UncoveredInnerExponent& e) {
      fs.error = e.what();
    } catch (const BudgetExceeded& e) {
      fs.error = e.what();
    }
    r.feasibility = std::move(fs);
  }

  check_consistency(r);
  return r;
}

// ---- JSON -------------------------------------------------------------------

namespace {

Json exponent_json(const Exponent& e) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < e.size(); ++i) a.push_back(e[i]);
  return a;
}

Exponent exponent_from(const Json& j) {
  Exponent e(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) e[static_cast<Eigen::Index>(i)] = j[i].get<int>();
  return e;
}

template <typename Range>
Json exponents_json(const Range& list) {
  Json a = Json::array();
  for (const auto& e : list) a.push_back(exponent_json(e));
  return a;
}

ExponentList exponents_from(const Json& j) {
  ExponentList out;
  for (const auto& e : j) out.push_back(exponent_from(e));
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::vector<Rational> rationals_from(const Json& j) {
  std::vector<Rational> out;
  for (const auto& q : j) out.push_back(parse_rational(q.get<std::string>()));
  return out;
}

Json term_json(const std::pair<Exponent, Rational>& t) {
  return Json{{"exponent", exponent_json(t.first)}, {"coefficient", to_string(t.second)}};
}

std::pair<Exponent, Rational> term_from(const Json& j) {
  return {exponent_from(j.at("exponent")), parse_rational(j.at("coefficient").get<std::string>())};
}

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& s, const Enum (&values)[N]) {
  for (auto v : values)
    if (to_string(v) == s) return v;
  throw ParseError("unknown value \"" + s + "\" in report", 0);
}

constexpr Conclusion kConclusions[] = {Conclusion::Sonc,         Conclusion::NotSonc,
                                       Conclusion::NonnegativeCircuit, Conclusion::NonnegativeCircuitBoundary,
                                       Conclusion::NotNonnegative, Conclusion::Sos,
                                       Conclusion::NotSos};
constexpr Certificate kCertificates[] = {Certificate::Exact, Certificate::Numeric};
constexpr NecessaryVerdict kNecessary[] = {NecessaryVerdict::Violated, NecessaryVerdict::Equality,
                                           NecessaryVerdict::StrictlySatisfied};
constexpr Comparison kComparisons[] = {Comparison::Less, Comparison::Equal, Comparison::Greater};
constexpr SimplexClass kClasses[] = {SimplexClass::MSimplex, SimplexClass::HSimplex, SimplexClass::Intermediate,
                                     SimplexClass::NotSimplicial};
constexpr SearchStatus kSearch[] = {SearchStatus::Feasible, SearchStatus::InfeasibleWithMargin,
                                    SearchStatus::Inconclusive};

constexpr CircuitKind kKinds[] = {CircuitKind::MonomialSquareSum, CircuitKind::ProperCircuit};

constexpr ZeroLocusStatus kLocus[] = {ZeroLocusStatus::Locus, ZeroLocusStatus::EmptyInOpenOrthant,
                                      ZeroLocusStatus::SignCaseOutOfScope};

template <typename T, typename Fn>
Json optional_json(const std::optional<T>& v, Fn&& fn) {
  return v ? fn(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const AnalysisReport& r) {
  Json j;
  j["schema"] = r.schema;
  j["form_name"] = r.form_name;
  j["form"] = r.form;
  j["num_vars"] = r.num_vars;
  j["degree"] = r.degree;
  j["zero_form"] = r.zero_form;
  j["hilbert_case"] = r.hilbert_case;
  j["partition"] = optional_json(r.partition, [](const PartitionSummary& p) {
    Json families = Json::array();
    for (const auto& [beta, n] : p.family_sizes) families.push_back({{"beta", exponent_json(beta)}, {"count", n}});
    return Json{{"squares", exponents_json(p.squares)},
                {"inner", exponents_json(p.inner)},
                {"unused_squares", exponents_json(p.unused_squares)},
                {"vertices", exponents_json(p.vertices)},
                {"family_sizes", families}};
  });
  j["non_square_vertex"] = optional_json(r.non_square_vertex, exponent_json);
  j["circuit"] = optional_json(r.circuit, [](const CircuitSummary& c) {
    Json outer = Json::array();
    for (const auto& t : c.outer) outer.push_back(term_json(t));
    Json o;
    o["kind"] = to_string(c.kind);
    o["outer"] = outer;
    o["inner"] = optional_json(c.inner, term_json);
    o["barycentric"] = rationals_json(c.barycentric);
    o["theta_bases"] = rationals_json(c.theta_bases);
    o["theta_exponents"] = rationals_json(c.theta_exponents);
    o["theta_float"] = c.theta_float;
    o["comparison"] = optional_json(c.comparison, [](Comparison x) { return Json(to_string(x)); });
    o["nonnegative"] = c.nonnegative;
    o["boundary"] = c.boundary;
    o["sos"] = optional_json(c.sos, [](bool b) { return Json(b); });
    o["negative_witness"] = optional_json(c.negative_witness, rationals_json);
    o["zero_locus"] = optional_json(c.zero_locus, [](ZeroLocusStatus s) { return Json(to_string(s)); });
    o["zero_locus_dimension"] = optional_json(c.zero_locus_dimension, [](int d) { return Json(d); });
    return o;
  });
  j["not_a_circuit"] = optional_json(r.not_a_circuit, [](const std::string& s) { return Json(s); });
  j["necessary_condition"] = optional_json(r.necessary, [](const NecessaryConditionReport& n) {
    Json o;
    o["inner_sum"] = to_string(n.inner_sum);
    o["outer_sum"] = to_string(n.outer_sum);
    o["verdict"] = to_string(n.verdict);
    o["uncovered_inner"] = exponents_json(n.uncovered_inner);
    o["corollary"] = optional_json(n.corollary, [](const CorollaryReport& c) {
      Json v = Json::array();
      for (const auto& x : c.violations)
        v.push_back({{"alpha", exponent_json(x.alpha)},
                     {"beta", exponent_json(x.beta)},
                     {"bound", to_string(x.bound)},
                     {"coefficient", to_string(x.coefficient)},
                     {"lambdas", rationals_json(x.lambdas)}});
      return Json{{"violations", v}};
    });
    return o;
  });
  j["mediated_set"] = optional_json(r.mediated, [](const MediatedSummary& m) {
    return Json{{"delta", exponents_json(m.delta)},
                {"star", exponents_json(m.star)},
                {"mid_delta", exponents_json(m.mid_delta)},
                {"lattice_size", m.lattice_size},
                {"classification", to_string(m.classification)}};
  });
  j["feasibility"] = optional_json(r.feasibility, [](const FeasibilitySummary& f) {
    Json o;
    o["status"] = optional_json(f.status, [](SearchStatus s) { return Json(to_string(s)); });
    o["certificate"] = f.exact ? "exact" : "numeric";
    o["objective"] = optional_json(f.objective, [](double x) { return Json(x); });
    o["margin"] = f.margin;
    o["normalized_margin"] = f.normalized_margin;
    o["free_params"] = f.free_params;
    o["circuits"] = f.circuits;
    o["remainder"] = f.remainder;
    o["error"] = f.error;
    return o;
  });
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(
        {{"conclusion", to_string(v.conclusion)}, {"certificate", to_string(v.certificate)}, {"reason", v.reason}});
  j["verdicts"] = verdicts;
  j["notes"] = r.notes;
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  r.schema = j.at("schema").get<int>();
  if (r.schema != 1) throw ParseError("unsupported report schema " + std::to_string(r.schema), 0);
  r.form_name = j.at("form_name").get<std::string>();
  r.form = j.at("form").get<std::string>();
  r.num_vars = j.at("num_vars").get<int>();
  r.degree = j.at("degree").get<int>();
  r.zero_form = j.at("zero_form").get<bool>();
  r.hilbert_case = j.at("hilbert_case").get<bool>();
  if (const auto& p = j.at("partition"); !p.is_null()) {
    PartitionSummary s;
    s.squares = exponents_from(p.at("squares"));
    s.inner = exponents_from(p.at("inner"));
    s.unused_squares = exponents_from(p.at("unused_squares"));
    s.vertices = exponents_from(p.at("vertices"));
    for (const auto& fam : p.at("family_sizes"))
      s.family_sizes.emplace_back(exponent_from(fam.at("beta")), fam.at("count").get<std::size_t>());
    r.partition = std::move(s);
  }
  if (const auto& v = j.at("non_square_vertex"); !v.is_null()) r.non_square_vertex = exponent_from(v);
  if (const auto& c = j.at("circuit"); !c.is_null()) {
    CircuitSummary s;
    s.kind = enum_from(c.at("kind").get<std::string>(), kKinds);
    for (const auto& t : c.at("outer")) s.outer.push_back(term_from(t));
    if (!c.at("inner").is_null()) s.inner = term_from(c.at("inner"));
    s.barycentric = rationals_from(c.at("barycentric"));
    s.theta_bases = rationals_from(c.at("theta_bases"));
    s.theta_exponents = rationals_from(c.at("theta_exponents"));
    s.theta_float = c.at("theta_float").get<double>();
    if (!c.at("comparison").is_null()) s.comparison = enum_from(c.at("comparison").get<std::string>(), kComparisons);
    s.nonnegative = c.at("nonnegative").get<bool>();
    s.boundary = c.at("boundary").get<bool>();
    if (!c.at("sos").is_null()) s.sos = c.at("sos").get<bool>();
    if (!c.at("negative_witness").is_null()) s.negative_witness = rationals_from(c.at("negative_witness"));
    if (!c.at("zero_locus").is_null()) s.zero_locus = enum_from(c.at("zero_locus").get<std::string>(), kLocus);
    if (!c.at("zero_locus_dimension").is_null()) s.zero_locus_dimension = c.at("zero_locus_dimension").get<int>();
    r.circuit = std::move(s);
  }
  if (const auto& n = j.at("not_a_circuit"); !n.is_null()) r.not_a_circuit = n.get<std::string>();
  if (const auto& n = j.at("necessary_condition"); !n.is_null()) {
    NecessaryConditionReport s;
    s.inner_sum = parse_rational(n.at("inner_sum").get<std::string>());
    s.outer_sum = parse_rational(n.at("outer_sum").get<std::string>());
    s.verdict = enum_from(n.at("verdict").get<std::string>(), kNecessary);
    for (const auto& e : n.at("uncovered_inner")) s.uncovered_inner.insert(exponent_from(e));
    if (const auto& c = n.at("corollary"); !c.is_null()) {
      CorollaryReport cr;
      for (const auto& v : c.at("violations"))
        cr.violations.push_back({exponent_from(v.at("alpha")), exponent_from(v.at("beta")),
                                 parse_rational(v.at("bound").get<std::string>()),
                                 parse_rational(v.at("coefficient").get<std::string>()), rationals_from(v.at("lambdas"))});
      s.corollary = std::move(cr);
    }
    r.necessary = std::move(s);
  }
  if (const auto& m = j.at("mediated_set"); !m.is_null()) {
    MediatedSummary s;
    s.delta = exponents_from(m.at("delta"));
    s.star = exponents_from(m.at("star"));
    s.mid_delta = exponents_from(m.at("mid_delta"));
    s.lattice_size = m.at("lattice_size").get<std::size_t>();
    s.classification = enum_from(m.at("classification").get<std::string>(), kClasses);
    r.mediated = std::move(s);
  }
  if (const auto& f = j.at("feasibility"); !f.is_null()) {
    FeasibilitySummary s;
    if (!f.at("status").is_null()) s.status = enum_from(f.at("status").get<std::string>(), kSearch);
    s.exact = f.at("certificate").get<std::string>() == "exact";
    if (!f.at("objective").is_null()) s.objective = f.at("objective").get<double>();
    s.margin = f.at("margin").get<double>();
    s.normalized_margin = f.at("normalized_margin").get<double>();
    s.free_params = f.at("free_params").get<int>();
    s.circuits = f.at("circuits").get<std::vector<std::string>>();
    s.remainder = f.at("remainder").get<std::string>();
    s.error = f.at("error").get<std::string>();
    r.feasibility = std::move(s);
  }
  for (const auto& v : j.at("verdicts"))
    r.verdicts.push_back({enum_from(v.at("conclusion").get<std::string>(), kConclusions),
                          enum_from(v.at("certificate").get<std::string>(), kCertificates),
                          v.at("reason").get<std::string>()});
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

// ---- text -------------------------------------------------------------------

std::string format_report(const AnalysisReport& r) {
  std::ostringstream out;
  out << "form: " << (r.form_name.empty() ? "(unnamed)" : r.form_name) << " (" << r.num_vars << " variables, degree "
      << r.degree << ")\n";
  out << "  " << r.form << "\n";
  out << "Hilbert case: " << (r.hilbert_case ? "yes" : "no") << "\n";
  if (r.zero_form) out << "zero form\n";
  if (r.partition) {
    const auto& p = *r.partition;
    out << "support: |S| = " << p.squares.size() << ", |I| = " << p.inner.size() << ", |R| = "
        << p.unused_squares.size() << ", vertices = " << p.vertices.size() << "\n";
    for (const auto& [beta, n] : p.family_sizes) out << "  N(" << to_string(beta) << ") = " << n << "\n";
  }
  if (r.circuit) {
    const auto& c = *r.circuit;
    out << "circuit: " << to_string(c.kind) << "\n  outer:";
    for (const auto& [e, q] : c.outer) out << " " << to_string(e) << ":" << to_string(q);
    out << "\n";
    if (c.inner) {
      out << "  inner: " << to_string(c.inner->first) << ":" << to_string(c.inner->second) << "\n  lambda:";
      for (const auto& l : c.barycentric) out << " " << to_string(l);
      out << "\n  Theta ~ " << fixed(c.theta_float, 10);
      if (c.comparison) out << ", |f_beta| vs Theta: " << to_string(*c.comparison);
      out << "\n";
    }
    if (c.zero_locus) {
      out << "  zero locus: " << to_string(*c.zero_locus);
      if (c.zero_locus_dimension) out << " (dimension " << *c.zero_locus_dimension << ")";
      out << "\n";
    }
    if (c.negative_witness) {
      out << "  negative at:";
      for (const auto& q : *c.negative_witness) out << " " << to_string(q);
      out << "\n";
    }
  }
  if (r.not_a_circuit) out << "not a circuit: " << *r.not_a_circuit << "\n";
  if (r.necessary) {
    const auto& n = *r.necessary;
    out << "necessary condition: sum |f_beta| = " << to_string(n.inner_sum) << ", sum f_alpha = "
        << to_string(n.outer_sum) << " -> " << to_string(n.verdict) << "\n";
    for (const auto& b : n.uncovered_inner) out << "  uncovered inner exponent " << to_string(b) << "\n";
    if (n.corollary) {
      out << "  equality-case violations: " << n.corollary->violations.size() << "\n";
      for (const auto& v : n.corollary->violations) {
        out << "    alpha " << to_string(v.alpha) << ", beta " << to_string(v.beta) << ": f_alpha = "
            << to_string(v.coefficient) << " < " << to_string(v.bound) << " (lambda:";
        for (const auto& l : v.lambdas) out << " " << to_string(l);
        out << ")\n";
      }
    }
  }
  if (r.mediated) {
    const auto& m = *r.mediated;
    out << "maximal mediated set: " << to_string(m.classification) << ", |star| = " << m.star.size()
        << ", |lattice| = " << m.lattice_size << "\n  star:";
    for (const auto& e : m.star) out << " " << to_string(e);
    out << "\n";
  }
  if (r.feasibility) {
    const auto& f = *r.feasibility;
    if (f.status) {
      out << "feasibility search: " << to_string(*f.status) << " (" << (f.exact ? "exact" : "numeric")
          << "), free parameters " << f.free_params;
      if (f.objective) out << ", objective " << fixed(*f.objective);
      out << ", margin " << fixed(f.margin) << "\n";
      for (const auto& c : f.circuits) out << "  circuit: " << c << "\n";
      if (!f.remainder.empty() && f.remainder != "0") out << "  remainder: " << f.remainder << "\n";
    } else {
      out << "feasibility search not run: " << f.error << "\n";
    }
  }
  for (const auto& note : r.notes) out << "note: " << note << "\n";
  out << "verdicts:\n";
  if (r.verdicts.empty()) out << "  (none)\n";
  for (const auto& v : r.verdicts) out << "  " << format_verdict(v) << "\n";
  return out.str();
}

}  // namespace sonckit
