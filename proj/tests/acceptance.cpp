// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every comparison is exact unless a tolerance is spelled out next to it.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sonckit/corpus.hpp"
#include "sonckit/grid.hpp"

using namespace sonckit;

namespace {

constexpr double kLocusResidual = 1e-8;  // |f(e^y)| relative to the largest term at y
constexpr int kLocusSamples = 100;
constexpr int kSoundnessSamples = 10000;
constexpr double kMinSearchMargin = 0.5;
constexpr int kRandomSimplices = 50;
constexpr std::size_t kMaxLattice = 60;
constexpr std::size_t kMaxExhaustiveFree = 16;

Exponent e(std::initializer_list<int> v) { return make_exponent(v); }
Rational q(long a, long b = 1) { return make_rational(Integer(a), Integer(b)); }

// Collects failed sub-checks of one criterion.
struct Criterion {
  std::vector<std::string> failures;
  std::ostringstream info;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool has_not_sonc(const AnalysisReport& r) { return r.has(Conclusion::NotSonc); }

// ---- 1 -----------------------------------------------------------------------
void motzkin_circuit(Criterion& c) {
  const auto circuit = as_circuit(motzkin_form());
  c.expect(circuit && circuit->kind == CircuitKind::ProperCircuit, "Motzkin form is a proper circuit");
  if (!circuit) return;
  c.expect(circuit->barycentric == std::vector<Rational>{q(1, 3), q(1, 3), q(1, 3)}, "lambda = (1/3,1/3,1/3)");
  const auto theta = circuit_number(*circuit);
  c.expect(theta.factor_bases == std::vector<Rational>{3, 3, 3}, "Theta bases all 3");
  c.expect(compare_circuit_number(theta, 3) == Comparison::Equal, "Theta = 3 exactly");
  c.expect(compare_circuit_number(theta, abs(circuit->inner->second)) == Comparison::Equal, "comparison Equal");
  const auto nn = decide_circuit_nonnegativity(*circuit);
  c.expect(nn.nonnegative && nn.boundary, "Nonnegative{boundary=true}");
  const auto outer = circuit->outer_exponents();
  const auto mms = maximal_mediated_set(ExponentSet(outer.begin(), outer.end()));
  c.expect(mms.star.count(e({2, 2, 2})) == 0, "(2,2,2) not in the maximal mediated set");
  c.expect(!circuit_is_sos(*circuit, mms), "circuit_is_sos = false");
  c.info << "Theta=" << theta.float_value << ", |star|=" << mms.star.size();
}

// ---- 2 -----------------------------------------------------------------------
void coefficient_sum_disproofs(Criterion& c) {
  struct Case {
    SparseForm f;
    std::optional<std::pair<long, long>> sums;
  };
  const std::vector<Case> cases{{robinson1_form(), std::make_pair(6L, 3L)},
                                {robinson2_form(), std::make_pair(16L, 6L)},
                                {q_family_form(3, 6), std::nullopt}};
  for (const auto& [f, sums] : cases) {
    const auto report = necessary_condition(f, support_partition(f));
    c.expect(report.verdict == NecessaryVerdict::Violated, f.name() + " violates the coefficient-sum condition");
    if (sums) {
      c.expect(report.inner_sum == sums->first && report.outer_sum == sums->second,
               f.name() + " sums " + std::to_string(sums->first) + " > " + std::to_string(sums->second));
    }
    c.expect(analyze(f).has(Conclusion::NotSonc, Certificate::Exact), f.name() + " verdict not SONC (exact)");
    c.info << f.name() << " " << to_string(report.inner_sum) << ">" << to_string(report.outer_sum) << "  ";
  }
}

// ---- 3 -----------------------------------------------------------------------
void equality_corollary(Criterion& c) {
  const SparseForm p = p_family_form(2, 6);
  const auto partition = support_partition(p);
  const auto report = necessary_condition(p, partition);
  c.expect(report.inner_sum == 8 && report.outer_sum == 8, "sums 8 = 8");
  c.expect(report.verdict == NecessaryVerdict::Equality, "Equality verdict");
  c.expect(partition.family_size(e({3, 3})) == 2, "N((3,3)) = 2");
  bool found = false;
  if (report.corollary) {
    for (const auto& v : report.corollary->violations) {
      if (v.alpha != e({2, 4}) || v.beta != e({3, 3})) continue;
      auto lambdas = v.lambdas;
      std::sort(lambdas.begin(), lambdas.end());
      found = v.bound == 2 && v.coefficient == 1 && lambdas == std::vector<Rational>{q(1, 2), q(3, 4)};
    }
  }
  c.expect(found, "violation at ((2,4),(3,3)) with bound 2 vs 1 and lambdas {1/2,3/4}");
  c.expect(analyze(p).has(Conclusion::NotSonc, Certificate::Exact), "verdict not SONC");
}

// ---- 4 -----------------------------------------------------------------------
void search_margin(Criterion& c) {
  const SparseForm f = square_satisfying_necessary_form();
  const auto partition = support_partition(f);
  const auto report = necessary_condition(f, partition);
  c.expect(report.outer_sum == q(33, 4) && report.inner_sum == 4, "sums 33/4 vs 4");
  c.expect(report.verdict != NecessaryVerdict::Violated, "necessary condition holds");
  const auto outcome = sonc_feasibility_search(f, partition);
  c.expect(outcome.status == SearchStatus::InfeasibleWithMargin, "search returns InfeasibleWithMargin");
  c.expect(outcome.margin >= kMinSearchMargin, "margin >= 0.5");
  AnalysisOptions options;
  options.search = true;
  bool labelled = false;
  for (const auto& v : analyze(f, options).verdicts)
    labelled = labelled || format_verdict(v).rfind("not SONC (numeric; margin reported", 0) == 0;
  c.expect(labelled, "report labels \"not SONC (numeric; margin reported ...)\"");
  c.info << "margin=" << outcome.margin << ", objective=" << outcome.objective;
}

// ---- 5 -----------------------------------------------------------------------
void separating_forms(Criterion& c) {
  const SparseForm t = separator_ternary_form();
  const auto rt = necessary_condition(t, support_partition(t));
  c.expect(rt.outer_sum == 4 && rt.inner_sum == 6, "ternary sums 6 > 4");
  c.expect(rt.verdict == NecessaryVerdict::Violated, "ternary Violated");
  const ExponentSet expected{e({2, 1, 0}), e({1, 2, 0}), e({1, 1, 1}), e({0, 0, 3})};
  c.expect(half_newton_support(t) == expected, "ternary half Newton support {x^2y, xy^2, xyz, z^3}");
  const SparseForm u = separator_quaternary_form();
  const auto ru = necessary_condition(u, support_partition(u));
  c.expect(ru.outer_sum == 8 && ru.inner_sum == 10, "quaternary sums 10 > 8");
  c.expect(ru.verdict == NecessaryVerdict::Violated, "quaternary Violated");
}

// ---- 6 -----------------------------------------------------------------------
void grid_vanishing(Criterion& c) {
  const auto r1 = evaluate_grid(robinson1_form(), NamedGrid::X);
  c.expect(r1.zeros == 8, "R1 on X has 8 zeros");
  for (const auto& entry : r1.entries)
    if (entry.point == oracle::to_vector({0, 0, 1})) c.expect(entry.value == 1, "R1(0,0,1) = 1");
  c.expect(evaluate_grid(schmuedgen_form(), NamedGrid::Xprime).zeros == 8, "S on X' has 8 zeros");
  c.expect(evaluate_grid(robinson2_form(), NamedGrid::Y).zeros == 7, "R2 on Y has 7 zeros");
}

// ---- 7 -----------------------------------------------------------------------
bool star_matches_oracles(const ExponentSet& delta, std::size_t& exhaustive) {
  const auto m = maximal_mediated_set(delta);
  const ExponentSet lattice = oracle::box_lattice_points(delta);
  if (m.lattice != lattice) return false;
  if (m.star != oracle::mms_rounds(delta, lattice)) return false;
  if (lattice.size() - delta.size() <= kMaxExhaustiveFree) {
    ++exhaustive;
    if (m.star != oracle::mms_exhaustive(delta, lattice)) return false;
  }
  return true;
}

void mediated_oracles(Criterion& c) {
  std::size_t corpus_sets = 0, exhaustive = 0;
  for (const auto& entry : builtin_corpus()) {
    if (entry.form.is_zero()) continue;
    const ExponentSet vertices = hull_vertices(entry.form.support());
    if (!std::all_of(vertices.begin(), vertices.end(), [](const Exponent& v) { return is_even(v); })) continue;
    ++corpus_sets;
    c.expect(star_matches_oracles(vertices, exhaustive), "corpus vertex set of " + entry.name);
  }

  std::mt19937 rng(20240531);
  int generated = 0;
  while (generated < kRandomSimplices) {
    const int n = 2 + generated % 3;
    const int half_degree = 1 + static_cast<int>(rng() % 4);
    std::uniform_int_distribution<int> pick(0, n - 1);
    ExponentList pts;
    for (int j = 0; j < n; ++j) {
      Exponent p = Exponent::Zero(n);
      for (int s = 0; s < half_degree; ++s) p[pick(rng)] += 2;
      pts.push_back(p);
    }
    const ExponentSet delta(pts.begin(), pts.end());
    if (delta.size() != pts.size() || oracle::barycentric(pts.front(), pts) == std::nullopt) continue;
    if (oracle::box_lattice_points(delta).size() > kMaxLattice) continue;
    ++generated;
    c.expect(star_matches_oracles(delta, exhaustive), "random simplex " + std::to_string(generated));
  }

  for (const auto& [f, beta] : {std::make_pair(choi_lam_q1_form(), e({1, 1, 1, 1})),
                                std::make_pair(choi_lam_q2_form(), e({2, 2, 2}))}) {
    const auto outer = as_circuit(f)->outer_exponents();
    const auto m = maximal_mediated_set(ExponentSet(outer.begin(), outer.end()));
    c.expect(m.star.count(beta) == 0, f.name() + " inner point excluded from the star");
  }
  c.info << corpus_sets << " corpus sets, " << generated << " random simplices, " << exhaustive
         << " checked exhaustively";
}

// ---- 8 -----------------------------------------------------------------------
void reduction_invariance(Criterion& c) {
  for (const auto& f : {robinson1_form(), robinson2_form(), p_family_form(2, 6), q_family_form(3, 6)}) {
    c.expect(analyze(f).has(Conclusion::NotSonc, Certificate::Exact), f.name() + " not SONC");
    const SparseForm embedded = embed_variables(f, 1);
    const SparseForm shifted = multiply_monomial_square(f, f.num_vars(), 1);
    c.expect(analyze(embedded).has(Conclusion::NotSonc, Certificate::Exact), f.name() + " embedded: not SONC");
    c.expect(analyze(shifted).has(Conclusion::NotSonc, Certificate::Exact), f.name() + " shifted: not SONC");
  }
}

// ---- 9 -----------------------------------------------------------------------
void zero_locus_suite(Criterion& c) {
  std::mt19937 rng(9);
  std::normal_distribution<double> step(0.0, 2.0);
  for (const auto& f : {motzkin_form(), motzkin_modified_form()}) {
    const auto circuit = as_circuit(f);
    if (!circuit) {
      c.expect(false, f.name() + " is a circuit");
      continue;
    }
    const auto result = zero_locus(*circuit);
    c.info << f.name() << ": " << to_string(result.status) << "  ";
    if (result.status != ZeroLocusStatus::Locus || result.locus->dimension != 1) {
      c.expect(false, f.name() + " has a 1-dimensional zero locus (got " + to_string(result.status) + ")");
      continue;
    }
    const Eigen::VectorXd y0 = result.locus->particular_solution();
    const Eigen::MatrixXd dirs = result.locus->directions();
    double worst = 0.0;
    for (int k = 0; k < kLocusSamples; ++k) {
      const Eigen::VectorXd y = y0 + step(rng) * dirs.col(0);
      double scale = 0.0;
      for (const auto& [a, coeff] : f.terms())
        scale = std::max(scale, std::abs(to_double(coeff)) * std::exp(a.cast<double>().dot(y)));
      worst = std::max(worst, std::abs(evaluate_float(f, y.array().exp().matrix())) / scale);
    }
    c.expect(worst <= kLocusResidual, f.name() + " locus residual <= 1e-8");
    c.info << "worst relative residual " << worst << "  ";
  }
  const double eu = std::exp(1.0);
  std::vector<Eigen::VectorXd> pts(4, Eigen::VectorXd(3));
  pts[0] << 1, -2, 1;
  pts[1] << -2, 1, 1;
  pts[2] << eu, eu, eu;
  pts[3] << 1, 1, 1;
  c.expect(logs_affinely_independent(pts), "log-images of the four points are affinely independent");
}

// ---- 10 ----------------------------------------------------------------------
void soundness(Criterion& c) {
  AnalysisOptions options;
  options.search = true;
  std::mt19937 rng(10);
  for (const auto& f : {motzkin_form(), motzkin_modified_form(), choi_lam_q1_form(), choi_lam_q2_form()}) {
    c.expect(!has_not_sonc(analyze(f, options)), f.name() + " receives no not-SONC verdict");
  }
  std::size_t circuits = 0;
  for (const auto& entry : builtin_corpus()) {
    if (entry.form.is_zero()) continue;
    const auto circuit = as_circuit(entry.form);
    if (!circuit || !decide_circuit_nonnegativity(*circuit).nonnegative) continue;
    ++circuits;
    const int n = entry.form.num_vars();
    bool ok = true;
    for (int k = 0; k < kSoundnessSamples && ok; ++k)
      ok = oracle::evaluate(entry.form, oracle::random_point(rng, n, 3, 8)) >= 0;
    c.expect(ok, entry.name + " nonnegative at 10^4 exact random points");
  }
  c.info << circuits << " nonnegative corpus circuits sampled";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"Motzkin circuit, Theta = 3, boundary, not SOS", motzkin_circuit},
      {"coefficient-sum disproofs R1, R2, q(3,6)", coefficient_sum_disproofs},
      {"equality case and corollary disproof p(2,6)", equality_corollary},
      {"feasibility search margin on a square satisfying the sum test", search_margin},
      {"separating forms violate the sum test", separating_forms},
      {"grid vanishing counts", grid_vanishing},
      {"maximal mediated sets match brute force", mediated_oracles},
      {"not-SONC verdicts survive embedding and monomial shifts", reduction_invariance},
      {"zero-locus residuals and log affine independence", zero_locus_suite},
      {"soundness on SONC forms and nonnegative circuits", soundness},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& ex) {
      c.failures.push_back(std::string("exception: ") + ex.what());
    }
    const bool pass = c.failures.empty();
    if (!pass) ++failed;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!c.info.str().empty()) std::cout << "  [" << c.info.str() << "]";
    std::cout << "\n";
    for (const auto& f : c.failures) std::cout << "        failed: " << f << "\n";
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << " of " << criteria.size()
            << " criteria pass in " << seconds << " s\n";
  return failed == 0 ? 0 : 1;
}
