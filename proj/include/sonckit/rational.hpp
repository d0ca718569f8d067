#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace sonckit {

// Exact scalars. Expression templates are disabled so that Eigen sees plain
// value types.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num, den);  // canonicalized by the gmp backend
}

/// Parses "p", "-p" or "p/q" (q != 0) into a rational in lowest terms.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// q^e for a nonnegative integer exponent.
Rational ipow(const Rational& q, unsigned long e);

Integer lcm_of_denominators(const std::vector<Rational>& values);

/// Best rational approximation of x with denominator at most max_den
/// (continued-fraction convergents and semiconvergents).
Rational rational_approximation(double x, long long max_den);

/// Exact rational value of a finite double.
Rational exact_from_double(double x);

}  // namespace sonckit
