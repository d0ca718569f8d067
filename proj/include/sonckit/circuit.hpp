#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "sonckit/exponent.hpp"
#include "sonckit/form.hpp"
#include "sonckit/rational.hpp"

namespace sonckit {

enum class CircuitKind { MonomialSquareSum, ProperCircuit };

std::string to_string(CircuitKind k);

/// Form whose support is an affinely independent set of even outer exponents
/// (the Newton polytope vertices, positive coefficients) plus at most one
/// inner exponent in the relative interior of their hull.
struct Circuit {
  SparseForm form;
  std::vector<std::pair<Exponent, Rational>> outer;
  std::optional<std::pair<Exponent, Rational>> inner;
  std::vector<Rational> barycentric;  // aligned with outer; empty for monomial square sums
  CircuitKind kind = CircuitKind::MonomialSquareSum;

  ExponentList outer_exponents() const;
};

enum class NotCircuitReason {
  VertexSquareMismatch,  // some Newton polytope vertex is not a monomial square
  AffinelyDependent,
  TooManyInner,
  InnerNotInRelint,
};

std::string to_string(NotCircuitReason reason);

struct NotACircuit {
  NotCircuitReason reason;
  std::string detail;
};

using CircuitDetection = std::variant<Circuit, NotACircuit>;

/// Throws ZeroFormInput.
CircuitDetection detect_circuit(const SparseForm& f);

/// detect_circuit when the caller only cares about the positive case.
std::optional<Circuit> as_circuit(const SparseForm& f);

/// Theta = prod_i base_i^{lambda_i} with base_i = f_alpha_i / lambda_i.
struct CircuitNumber {
  std::vector<Rational> factor_bases;
  std::vector<Rational> exponents;
  double float_value = 0.0;  // display only
};

/// Throws MonomialSquareSumHasNoCircuitNumber.
CircuitNumber circuit_number(const Circuit& c);

enum class Comparison { Less, Equal, Greater };

std::string to_string(Comparison c);

/// Exact comparison of t >= 0 against Theta: Less means t < Theta.
Comparison compare_circuit_number(const CircuitNumber& theta, const Rational& t);

struct Nonnegativity {
  bool nonnegative = false;
  bool boundary = false;  // |f_beta| == Theta
};

Nonnegativity decide_circuit_nonnegativity(const Circuit& c);

/// Solution set of f(e^y) = 0 for a circuit with f_beta = -Theta:
/// rows (alpha_i - alpha_0)^T y = (log lambda_i - log f_i) - (log lambda_0 - log f_0).
struct ZeroLocus {
  RationalMatrix matrix;                             // m x n
  std::vector<std::pair<Rational, Rational>> rhs_symbolic;  // (lambda_i, f_i), i = 0..m
  int dimension = 0;                                 // n - m

  Eigen::VectorXd numeric_rhs() const;
  /// Minimum-norm solution of the (consistent) system.
  Eigen::VectorXd particular_solution() const;
  /// Orthonormal basis of the solution directions, one per column.
  Eigen::MatrixXd directions() const;
};

enum class ZeroLocusStatus { Locus, EmptyInOpenOrthant, SignCaseOutOfScope };

std::string to_string(ZeroLocusStatus s);

struct ZeroLocusResult {
  ZeroLocusStatus status = ZeroLocusStatus::EmptyInOpenOrthant;
  std::optional<ZeroLocus> locus;
};

/// Requires a nonnegative proper circuit; throws NotNonnegativeCircuit otherwise.
ZeroLocusResult zero_locus(const Circuit& c);

/// Affine independence of {log|v_i|} by the singular values of the difference
/// matrix (tolerance 1e-9, approximate). Throws ZeroCoordinate.
bool logs_affinely_independent(const std::vector<Eigen::VectorXd>& points);

/// Rational point with f(x) < 0 for a circuit decided not nonnegative,
/// found near the AM-GM equality direction, with random sampling as fallback.
std::optional<RationalVector> find_negative_witness(const Circuit& c, unsigned seed = 1);

}  // namespace sonckit
