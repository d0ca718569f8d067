#include "sonckit/sonc.hpp"

#include <algorithm>
#include <tuple>

namespace sonckit {

std::string to_string(NecessaryVerdict v) {
  switch (v) {
    case NecessaryVerdict::Violated: return "Violated";
    case NecessaryVerdict::Equality: return "Equality";
    case NecessaryVerdict::StrictlySatisfied: return "StrictlySatisfied";
  }
  return "?";
}

std::string to_string(DecompositionCheck c) {
  switch (c) {
    case DecompositionCheck::Valid: return "Valid";
    case DecompositionCheck::CircuitNotNonnegative: return "CircuitNotNonnegative";
    case DecompositionCheck::RemainderNotMonomialSquares: return "RemainderNotMonomialSquares";
    case DecompositionCheck::SumMismatch: return "SumMismatch";
    case DecompositionCheck::NotCancellationFree: return "NotCancellationFree";
  }
  return "?";
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Feasible: return "Feasible";
    case SearchStatus::InfeasibleWithMargin: return "InfeasibleWithMargin";
    case SearchStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::pair<Rational, Rational> coefficient_sums(const SparseForm& f, const SupportPartition& p) {
  Rational inner(0), outer(0);
  for (const auto& beta : p.i_set) inner += abs(f.coefficient(beta));
  for (const auto& alpha : p.covering_squares()) outer += f.coefficient(alpha);
  return {inner, outer};
}

}  // namespace

CorollaryReport corollary_check(const SparseForm& f, const SupportPartition& partition) {
  const auto [inner, outer] = coefficient_sums(f, partition);
  if (inner != outer)
    throw PreconditionNotEquality("coefficient sums differ (" + to_string(inner) + " vs " + to_string(outer) + ")");
  CorollaryReport report;
  for (const auto& alpha : partition.covering_squares()) {
    const Rational f_alpha = f.coefficient(alpha);
    for (const auto& beta : partition.i_set) {
      const auto it = partition.simplex_families.find(beta);
      if (it == partition.simplex_families.end() || it->second.empty()) continue;
      const Rational f_beta = abs(f.coefficient(beta));
      std::vector<Rational> lambdas;
      for (const auto& simplex : it->second) lambdas.push_back(simplex.coordinate_of(alpha));
      const Rational bound = *std::min_element(lambdas.begin(), lambdas.end()) * f_beta;
      if (f_alpha < bound) report.violations.push_back({alpha, beta, bound, f_alpha, std::move(lambdas)});
    }
  }
  return report;
}

NecessaryConditionReport necessary_condition(const SparseForm& f, const SupportPartition& partition) {
  if (f.is_zero()) throw ZeroFormInput();
  NecessaryConditionReport report;
  std::tie(report.inner_sum, report.outer_sum) = coefficient_sums(f, partition);
  for (const auto& beta : partition.i_set)
    if (partition.family_size(beta) == 0) report.uncovered_inner.insert(beta);
  if (!report.uncovered_inner.empty() || report.inner_sum > report.outer_sum) {
    report.verdict = NecessaryVerdict::Violated;
  } else if (report.inner_sum == report.outer_sum) {
    report.verdict = NecessaryVerdict::Equality;
    report.corollary = corollary_check(f, partition);
  } else {
    report.verdict = NecessaryVerdict::StrictlySatisfied;
  }
  return report;
}

std::optional<SoncDecomposition> make_decomposition(const std::vector<SparseForm>& summands,
                                                    const SparseForm& remainder) {
  SoncDecomposition d;
  d.monomial_square_remainder = remainder;
  for (const auto& s : summands) {
    auto c = as_circuit(s);
    if (!c) return std::nullopt;
    d.circuits.push_back(std::move(*c));
  }
  return d;
}

DecompositionVerdict verify_decomposition(const SparseForm& f, const SoncDecomposition& d) {
  for (std::size_t i = 0; i < d.circuits.size(); ++i) {
    const auto& c = d.circuits[i];
    // Re-detect so that hand-built Circuit values cannot smuggle in wrong data.
    const auto redetected = as_circuit(c.form);
    if (!redetected || !decide_circuit_nonnegativity(*redetected).nonnegative)
      return {DecompositionCheck::CircuitNotNonnegative, "circuit " + std::to_string(i + 1) + ": " + format_form(c.form)};
  }
  for (const auto& [e, coeff] : d.monomial_square_remainder.terms())
    if (coeff < 0 || !is_even(e))
      return {DecompositionCheck::RemainderNotMonomialSquares, "remainder term " + monomial_string(e)};
  SparseForm total = d.monomial_square_remainder.num_vars() == 0 ? SparseForm::zero(f.num_vars(), f.degree())
                                                                 : d.monomial_square_remainder;
  try {
    for (const auto& c : d.circuits) total = total + c.form;
  } catch (const Error& e) {
    return {DecompositionCheck::SumMismatch, e.what()};
  }
  if (!(total == f)) {
    const SparseForm diff = f - total;
    return {DecompositionCheck::SumMismatch, "target minus sum = " + format_form(diff)};
  }
  for (std::size_t i = 0; i < d.circuits.size(); ++i)
    for (const auto& [e, coeff] : d.circuits[i].form.terms())
      if (f.coefficient(e) == 0)
        return {DecompositionCheck::NotCancellationFree,
                "circuit " + std::to_string(i + 1) + " uses " + monomial_string(e) + " outside supp(f)"};
  return {};
}

}  // namespace sonckit
