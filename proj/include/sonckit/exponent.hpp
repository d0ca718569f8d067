#pragma once

#include <set>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sonckit {

/// Exponent vector alpha in N_0^n.
using Exponent = Eigen::VectorXi;

inline int total_degree(const Exponent& a) { return a.sum(); }

inline bool is_even(const Exponent& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] % 2 != 0) return false;
  return true;
}

/// Graded lexicographic order, larger exponents first (x1^2 > x1*x2 > x2^2).
/// All containers keyed by exponents iterate in this order.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const int da = a.sum(), db = b.sum();
    if (da != db) return da > db;
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

using ExponentSet = std::set<Exponent, GrlexDescending>;
using ExponentList = std::vector<Exponent>;

/// Lexicographic comparison of exponent lists under GrlexDescending.
inline bool list_less(const ExponentList& a, const ExponentList& b) {
  const GrlexDescending cmp;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (cmp(a[i], b[i])) return true;
    if (cmp(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

inline Exponent make_exponent(std::initializer_list<int> entries) {
  Exponent e(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (int v : entries) e[i++] = v;
  return e;
}

/// "(4,2,0)"
std::string to_string(const Exponent& a);

/// "x1^4*x2^2"; the empty monomial prints as "1".
std::string monomial_string(const Exponent& a);

}  // namespace sonckit
