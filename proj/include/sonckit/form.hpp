#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sonckit/errors.hpp"
#include "sonckit/exponent.hpp"
#include "sonckit/rational.hpp"

namespace sonckit {

/// Homogeneous polynomial with exact rational coefficients, stored as a sparse
/// map from exponent vectors to nonzero coefficients. Immutable once built.
class SparseForm {
 public:
  using Terms = std::map<Exponent, Rational, GrlexDescending>;

  SparseForm() = default;

  /// Validates exponent lengths and homogeneity; zero coefficients are dropped.
  SparseForm(int num_vars, int degree, Terms terms, std::string name = {});

  static SparseForm zero(int num_vars, int degree = 0);
  static SparseForm monomial(const Exponent& exponent, const Rational& coefficient);
  /// The linear form x_{index} (1-based).
  static SparseForm variable(int num_vars, int index);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  const std::string& name() const { return name_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponent& exponent) const;
  ExponentSet support() const;

  SparseForm with_name(std::string name) const;

  /// Equal variable count and identical term maps (names are ignored).
  friend bool operator==(const SparseForm& a, const SparseForm& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  int num_vars_ = 0;
  int degree_ = 0;
  Terms terms_;
  std::string name_;
};

SparseForm operator+(const SparseForm& a, const SparseForm& b);
SparseForm operator-(const SparseForm& a, const SparseForm& b);
SparseForm operator-(const SparseForm& a);
SparseForm operator*(const SparseForm& a, const SparseForm& b);
SparseForm operator*(const Rational& c, const SparseForm& f);
SparseForm pow(const SparseForm& f, unsigned k);

/// Exact or floating-point evaluation sum_alpha f_alpha * point^alpha.
/// Floating-point results are approximate.
template <typename Scalar>
Scalar evaluate(const SparseForm& f, const VectorX<Scalar>& point);

extern template Rational evaluate<Rational>(const SparseForm&, const RationalVector&);
extern template double evaluate<double>(const SparseForm&, const Eigen::VectorXd&);

inline double evaluate_float(const SparseForm& f, const Eigen::VectorXd& point) {
  return evaluate<double>(f, point);
}

/// Same terms with exponents zero-padded to num_vars + m variables.
SparseForm embed_variables(const SparseForm& f, int m);

/// x_{var_index}^{2 ell} * f (var_index is 1-based).
SparseForm multiply_monomial_square(const SparseForm& f, int var_index, int ell);

/// f(A x), expanded exactly.
SparseForm substitute_linear(const SparseForm& f, const RationalMatrix& a);

/// Parses the textual grammar
///   form := [sign] term {sign term}, term := coeff ['*' mono] | mono,
///   coeff := int ['/' posint], mono := factor {'*' factor},
///   factor := 'x' posint ['^' posint]
/// with whitespace ignored. Without num_vars the largest variable index used
/// determines the arity.
SparseForm parse_form(std::string_view text, std::optional<int> num_vars = std::nullopt);

/// Canonical text: terms in descending graded-lex order, coefficients as p/q.
std::string format_form(const SparseForm& f);

/// Form file: '#' lines carry metadata ("# name: motzkin", "# vars: 4"),
/// all other lines are concatenated into one form.
SparseForm parse_form_file(std::string_view contents);
SparseForm read_form_file(const std::string& path);
std::string format_form_file(const SparseForm& f);

}  // namespace sonckit
