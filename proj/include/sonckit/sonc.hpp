#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sonckit/circuit.hpp"
#include "sonckit/form.hpp"
#include "sonckit/geometry.hpp"

namespace sonckit {

enum class NecessaryVerdict { Violated, Equality, StrictlySatisfied };

std::string to_string(NecessaryVerdict v);

struct CorollaryViolation {
  Exponent alpha;
  Exponent beta;
  Rational bound;        // min_k lambda^(k) * |f_beta|
  Rational coefficient;  // f_alpha
  std::vector<Rational> lambdas;  // lambda^(k) for k = 1..N(beta), zero where alpha is not a vertex
};

struct CorollaryReport {
  std::vector<CorollaryViolation> violations;
};

struct NecessaryConditionReport {
  Rational inner_sum;  // sum over I of |f_beta|
  Rational outer_sum;  // sum over S \ R of f_alpha
  NecessaryVerdict verdict = NecessaryVerdict::StrictlySatisfied;
  ExponentSet uncovered_inner;  // beta with N(beta) = 0
  std::optional<CorollaryReport> corollary;
};

/// Compares the inner and outer coefficient sums; inner exponents without a
/// covering simplex force Violated. Runs the corollary check on Equality.
NecessaryConditionReport necessary_condition(const SparseForm& f, const SupportPartition& partition);

/// f_alpha >= min_k lambda_ab^(k) |f_beta| for all (alpha, beta) in (S \ R) x I.
/// Throws PreconditionNotEquality unless the coefficient sums agree.
CorollaryReport corollary_check(const SparseForm& f, const SupportPartition& partition);

struct SoncDecomposition {
  std::vector<Circuit> circuits;
  SparseForm monomial_square_remainder;
};

/// Builds a decomposition from summand forms, detecting each as a circuit.
/// Summands that are not circuits make the result nullopt.
std::optional<SoncDecomposition> make_decomposition(const std::vector<SparseForm>& summands,
                                                    const SparseForm& remainder);

enum class DecompositionCheck {
  Valid,
  CircuitNotNonnegative,
  RemainderNotMonomialSquares,
  SumMismatch,
  NotCancellationFree,
};

std::string to_string(DecompositionCheck c);

struct DecompositionVerdict {
  DecompositionCheck check = DecompositionCheck::Valid;
  std::string detail;

  bool valid() const { return check == DecompositionCheck::Valid; }
};

/// Checks, in order: each circuit nonnegative, remainder a sum of monomial
/// squares, exact sum, cancellation-free supports.
DecompositionVerdict verify_decomposition(const SparseForm& f, const SoncDecomposition& d);

struct SearchBudget {
  int max_params = 6;
  double infeasibility_margin = 1e-3;  // relative to max |f_beta|
  int iterations = 100000;
  int seeds = 4;
};

enum class SearchStatus { Feasible, InfeasibleWithMargin, Inconclusive };

std::string to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::Inconclusive;
  bool exact = false;  // Feasible only: decomposition verified in rationals
  std::optional<SoncDecomposition> decomposition;
  double objective = 0.0;  // min over starts of max_beta log(|f_beta| / sum_k Theta_k)
  double margin = 0.0;     // best max over circuits of (nu |f_beta| - Theta)
  double normalized_margin = 0.0;
  int free_params = 0;
};

/// Numeric search for a cancellation-free decomposition with rational
/// post-verification. Throws UncoveredInnerExponent and BudgetExceeded.
SearchOutcome sonc_feasibility_search(const SparseForm& f, const SupportPartition& partition,
                                      const SearchBudget& budget = {});

}  // namespace sonckit
