#include "sonckit/form.hpp"

#include <cmath>
#include <sstream>

namespace sonckit {

// ---- rational helpers -------------------------------------------------------

Rational ipow(const Rational& q, unsigned long e) {
  Rational result(1), base(q);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
  Integer l(1);
  for (const auto& v : values) l = boost::multiprecision::lcm(l, den(v));
  return l;
}

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

Rational exact_from_double(double x) {
  if (!std::isfinite(x)) throw Error("non-finite value has no rational representation");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an integer for IEEE doubles.
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational r = Rational(Integer(scaled));
  exp -= 53;
  if (exp >= 0) return r * ipow(Rational(2), static_cast<unsigned long>(exp));
  return r / ipow(Rational(2), static_cast<unsigned long>(-exp));
}

Rational rational_approximation(double x, long long max_den) {
  if (!std::isfinite(x)) throw Error("non-finite value has no rational approximation");
  const Rational target = exact_from_double(x);
  // Continued fraction expansion of the exact value of x.
  Integer p0(0), q0(1), p1(1), q1(0);
  Rational rest = target;
  const Integer cap(max_den);
  for (;;) {
    Integer a = num(rest) / den(rest);
    if (num(rest) < 0 && a * den(rest) != num(rest)) a -= 1;  // floor
    const Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > cap) {
      // Largest admissible semiconvergent, compared with the last convergent.
      const Integer k = (cap - q0) / q1;
      const Rational semi = make_rational(k * p1 + p0, k * q1 + q0);
      const Rational conv = make_rational(p1, q1);
      return abs(semi - target) < abs(conv - target) ? semi : conv;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const Rational frac = rest - Rational(a);
    if (frac == 0) break;
    rest = Rational(1) / frac;
  }
  return make_rational(p1, q1);
}

// ---- exponents --------------------------------------------------------------

std::string to_string(const Exponent& a) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

std::string monomial_string(const Exponent& a) {
  std::string s;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (a[i] != 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

// ---- SparseForm -------------------------------------------------------------

SparseForm::SparseForm(int num_vars, int degree, Terms terms, std::string name)
    : num_vars_(num_vars), degree_(degree), name_(std::move(name)) {
  if (num_vars <= 0) throw DimensionMismatch("a form needs at least one variable");
  for (auto& [e, c] : terms) {
    if (e.size() != num_vars) throw DimensionMismatch("exponent " + to_string(e) + " has wrong length");
    if ((e.array() < 0).any()) throw DimensionMismatch("negative exponent " + to_string(e));
    if (c == 0) continue;
    if (e.sum() != degree)
      throw NotHomogeneous("term " + monomial_string(e) + " has degree " + std::to_string(e.sum()) +
                           ", expected " + std::to_string(degree));
    terms_.emplace(e, std::move(c));
  }
}

SparseForm SparseForm::zero(int num_vars, int degree) { return SparseForm(num_vars, degree, {}); }

SparseForm SparseForm::monomial(const Exponent& exponent, const Rational& coefficient) {
  Terms t;
  t.emplace(exponent, coefficient);
  return SparseForm(static_cast<int>(exponent.size()), exponent.sum(), std::move(t));
}

SparseForm SparseForm::variable(int num_vars, int index) {
  if (index < 1 || index > num_vars) throw DimensionMismatch("variable index out of range");
  Exponent e = Exponent::Zero(num_vars);
  e[index - 1] = 1;
  return monomial(e, Rational(1));
}

Rational SparseForm::coefficient(const Exponent& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

ExponentSet SparseForm::support() const {
  ExponentSet s;
  for (const auto& [e, c] : terms_) s.insert(e);
  return s;
}

SparseForm SparseForm::with_name(std::string name) const {
  SparseForm copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

namespace {

void require_same_arity(const SparseForm& a, const SparseForm& b) {
  if (a.num_vars() != b.num_vars())
    throw DimensionMismatch("forms have " + std::to_string(a.num_vars()) + " and " +
                            std::to_string(b.num_vars()) + " variables");
}

}  // namespace

SparseForm operator+(const SparseForm& a, const SparseForm& b) {
  require_same_arity(a, b);
  if (a.is_zero() && a.degree() != b.degree()) return b;
  if (b.is_zero() && a.degree() != b.degree()) return a;
  if (a.degree() != b.degree()) throw NotHomogeneous("sum of forms of different degree");
  SparseForm::Terms t = a.terms();
  for (const auto& [e, c] : b.terms()) {
    auto [it, inserted] = t.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
  return SparseForm(a.num_vars(), a.degree(), std::move(t));
}

SparseForm operator-(const SparseForm& a) { return Rational(-1) * a; }

SparseForm operator-(const SparseForm& a, const SparseForm& b) { return a + (-b); }

SparseForm operator*(const Rational& c, const SparseForm& f) {
  SparseForm::Terms t;
  if (c != 0)
    for (const auto& [e, v] : f.terms()) t.emplace(e, c * v);
  return SparseForm(f.num_vars(), f.degree(), std::move(t));
}

SparseForm operator*(const SparseForm& a, const SparseForm& b) {
  require_same_arity(a, b);
  SparseForm::Terms t;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e = ea + eb;
      auto [it, inserted] = t.emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return SparseForm(a.num_vars(), a.degree() + b.degree(), std::move(t));
}

SparseForm pow(const SparseForm& f, unsigned k) {
  Exponent zero = Exponent::Zero(f.num_vars());
  SparseForm result = SparseForm::monomial(zero, Rational(1));
  for (unsigned i = 0; i < k; ++i) result = result * f;
  return result;
}

template <typename Scalar>
Scalar evaluate(const SparseForm& f, const VectorX<Scalar>& point) {
  if (point.size() != f.num_vars())
    throw DimensionMismatch("point has " + std::to_string(point.size()) + " coordinates, form has " +
                            std::to_string(f.num_vars()) + " variables");
  // powers[i][k] = point_i^k
  std::vector<std::vector<Scalar>> powers(static_cast<std::size_t>(f.num_vars()));
  for (int i = 0; i < f.num_vars(); ++i) {
    auto& p = powers[static_cast<std::size_t>(i)];
    p.reserve(static_cast<std::size_t>(f.degree()) + 1);
    p.push_back(Scalar(1));
    for (int k = 1; k <= f.degree(); ++k) p.push_back(p.back() * point[i]);
  }
  Scalar total(0);
  for (const auto& [e, c] : f.terms()) {
    Scalar term;
    if constexpr (std::is_same_v<Scalar, Rational>) {
      term = c;
    } else {
      term = static_cast<Scalar>(to_double(c));
    }
    for (int i = 0; i < f.num_vars(); ++i)
      if (e[i] != 0) term *= powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[i])];
    total += term;
  }
  return total;
}

template Rational evaluate<Rational>(const SparseForm&, const RationalVector&);
template double evaluate<double>(const SparseForm&, const Eigen::VectorXd&);

SparseForm embed_variables(const SparseForm& f, int m) {
  if (m < 0) throw DimensionMismatch("cannot embed into fewer variables");
  SparseForm::Terms t;
  for (const auto& [e, c] : f.terms()) {
    Exponent padded = Exponent::Zero(f.num_vars() + m);
    padded.head(f.num_vars()) = e;
    t.emplace(std::move(padded), c);
  }
  return SparseForm(f.num_vars() + m, f.degree(), std::move(t), f.name());
}

SparseForm multiply_monomial_square(const SparseForm& f, int var_index, int ell) {
  if (var_index < 1 || var_index > f.num_vars()) throw DimensionMismatch("variable index out of range");
  if (ell < 0) throw DimensionMismatch("negative power");
  SparseForm::Terms t;
  for (const auto& [e, c] : f.terms()) {
    Exponent shifted = e;
    shifted[var_index - 1] += 2 * ell;
    t.emplace(std::move(shifted), c);
  }
  return SparseForm(f.num_vars(), f.degree() + 2 * ell, std::move(t), f.name());
}

SparseForm substitute_linear(const SparseForm& f, const RationalMatrix& a) {
  const int n = f.num_vars();
  if (a.rows() != n || a.cols() != n)
    throw DimensionMismatch("substitution matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  if (f.is_zero()) return f;
  // Linear forms (A x)_i and their powers, computed on demand.
  std::vector<std::vector<SparseForm>> powers(static_cast<std::size_t>(n));
  const Exponent one = Exponent::Zero(n);
  for (int i = 0; i < n; ++i) {
    SparseForm row = SparseForm::zero(n, 1);
    for (int j = 0; j < n; ++j)
      if (a(i, j) != 0) row = row + a(i, j) * SparseForm::variable(n, j + 1);
    auto& p = powers[static_cast<std::size_t>(i)];
    p.push_back(SparseForm::monomial(one, Rational(1)));
    for (int k = 1; k <= f.degree(); ++k) p.push_back(p.back() * row);
  }
  SparseForm result = SparseForm::zero(n, f.degree());
  for (const auto& [e, c] : f.terms()) {
    SparseForm term = SparseForm::monomial(one, c);
    for (int i = 0; i < n; ++i)
      if (e[i] != 0) term = term * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[i])];
    result = result + term;
  }
  return SparseForm(n, f.degree(), result.terms(), f.name());
}

}  // namespace sonckit
