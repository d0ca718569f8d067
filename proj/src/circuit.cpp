#include "sonckit/circuit.hpp"

#include <cmath>
#include <random>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "sonckit/geometry.hpp"
#include "sonckit/linalg.hpp"

namespace sonckit {

ExponentList Circuit::outer_exponents() const {
  ExponentList out;
  out.reserve(outer.size());
  for (const auto& [e, c] : outer) out.push_back(e);
  return out;
}

std::string to_string(NotCircuitReason reason) {
  switch (reason) {
    case NotCircuitReason::VertexSquareMismatch: return "vertex is not a monomial square";
    case NotCircuitReason::AffinelyDependent: return "affinely dependent vertices";
    case NotCircuitReason::TooManyInner: return "more than one inner term";
    case NotCircuitReason::InnerNotInRelint: return "inner exponent not in the relative interior";
  }
  return "?";
}

std::string to_string(CircuitKind k) { return k == CircuitKind::ProperCircuit ? "ProperCircuit" : "MonomialSquareSum"; }

std::string to_string(ZeroLocusStatus s) {
  switch (s) {
    case ZeroLocusStatus::Locus: return "Locus";
    case ZeroLocusStatus::EmptyInOpenOrthant: return "EmptyInOpenOrthant";
    case ZeroLocusStatus::SignCaseOutOfScope: return "SignCaseOutOfScope";
  }
  return "?";
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "Less";
    case Comparison::Equal: return "Equal";
    case Comparison::Greater: return "Greater";
  }
  return "?";
}

CircuitDetection detect_circuit(const SparseForm& f) {
  if (f.is_zero()) throw ZeroFormInput();
  const ExponentSet squares = monomial_square_exponents(f);
  const ExponentSet vertices = hull_vertices(f.support());
  for (const auto& v : vertices)
    if (!squares.count(v))
      return NotACircuit{NotCircuitReason::VertexSquareMismatch, "vertex " + to_string(v) + " is not a monomial square"};
  const ExponentList outer(vertices.begin(), vertices.end());
  if (!affinely_independent(outer))
    return NotACircuit{NotCircuitReason::AffinelyDependent, std::to_string(outer.size()) + " vertices in dimension " +
                                                                std::to_string(f.num_vars())};
  Circuit c;
  c.form = f;
  for (const auto& v : outer) c.outer.emplace_back(v, f.coefficient(v));
  const std::size_t inner_count = f.size() - outer.size();
  if (inner_count == 0) {
    c.kind = CircuitKind::MonomialSquareSum;
    return c;
  }
  if (inner_count > 1)
    return NotACircuit{NotCircuitReason::TooManyInner, std::to_string(inner_count) + " terms off the vertex set"};
  for (const auto& [e, coeff] : f.terms()) {
    if (vertices.count(e)) continue;
    auto lambda = barycentric_coordinates(e, outer);
    if (!lambda)
      return NotACircuit{NotCircuitReason::InnerNotInRelint, to_string(e) + " is not in the relative interior"};
    c.inner = std::make_pair(e, coeff);
    c.barycentric = std::move(*lambda);
  }
  c.kind = CircuitKind::ProperCircuit;
  return c;
}

std::optional<Circuit> as_circuit(const SparseForm& f) {
  auto d = detect_circuit(f);
  if (auto* c = std::get_if<Circuit>(&d)) return std::move(*c);
  return std::nullopt;
}

CircuitNumber circuit_number(const Circuit& c) {
  if (c.kind != CircuitKind::ProperCircuit) throw MonomialSquareSumHasNoCircuitNumber();
  CircuitNumber theta;
  double log_value = 0.0;
  for (std::size_t i = 0; i < c.outer.size(); ++i) {
    const Rational base = c.outer[i].second / c.barycentric[i];
    theta.factor_bases.push_back(base);
    theta.exponents.push_back(c.barycentric[i]);
    log_value += to_double(c.barycentric[i]) * std::log(to_double(base));
  }
  theta.float_value = std::exp(log_value);
  return theta;
}

Comparison compare_circuit_number(const CircuitNumber& theta, const Rational& t) {
  if (t <= 0) return Comparison::Less;
  // t <= Theta  iff  t^L <= prod base_i^(L lambda_i) with L clearing all denominators.
  const Integer l = lcm_of_denominators(theta.exponents);
  const auto lu = l.convert_to<unsigned long>();
  const Rational lhs = ipow(t, lu);
  Rational rhs(1);
  for (std::size_t i = 0; i < theta.factor_bases.size(); ++i) {
    const Rational power = theta.exponents[i] * Rational(l);
    rhs *= ipow(theta.factor_bases[i], num(power).convert_to<unsigned long>());
  }
  if (lhs < rhs) return Comparison::Less;
  if (lhs > rhs) return Comparison::Greater;
  return Comparison::Equal;
}

Nonnegativity decide_circuit_nonnegativity(const Circuit& c) {
  if (c.kind == CircuitKind::MonomialSquareSum) return {true, false};
  // A positive inner monomial square only adds a nonnegative term.
  if (c.inner->second > 0 && is_even(c.inner->first)) return {true, false};
  const auto cmp = compare_circuit_number(circuit_number(c), abs(c.inner->second));
  return {cmp != Comparison::Greater, cmp == Comparison::Equal};
}

Eigen::VectorXd ZeroLocus::numeric_rhs() const {
  auto term = [](const std::pair<Rational, Rational>& p) {
    return std::log(to_double(p.first)) - std::log(to_double(p.second));
  };
  Eigen::VectorXd b(matrix.rows());
  for (Eigen::Index i = 0; i < matrix.rows(); ++i)
    b[i] = term(rhs_symbolic[static_cast<std::size_t>(i) + 1]) - term(rhs_symbolic[0]);
  return b;
}

namespace {

Eigen::MatrixXd to_double_matrix(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

}  // namespace

Eigen::VectorXd ZeroLocus::particular_solution() const {
  const Eigen::MatrixXd a = to_double_matrix(matrix);
  return a.completeOrthogonalDecomposition().solve(numeric_rhs());
}

Eigen::MatrixXd ZeroLocus::directions() const {
  const Eigen::MatrixXd a = to_double_matrix(matrix);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const Eigen::Index n = a.cols();
  return svd.matrixV().rightCols(n - a.rows());
}

ZeroLocusResult zero_locus(const Circuit& c) {
  const auto nonneg = decide_circuit_nonnegativity(c);
  if (!nonneg.nonnegative) throw NotNonnegativeCircuit("zero locus requires a nonnegative circuit");
  ZeroLocusResult result;
  const bool inner_square = c.kind == CircuitKind::ProperCircuit && c.inner->second > 0 && is_even(c.inner->first);
  if (c.kind == CircuitKind::MonomialSquareSum || inner_square || !nonneg.boundary) {
    result.status = ZeroLocusStatus::EmptyInOpenOrthant;
    return result;
  }
  if (c.inner->second > 0) {
    result.status = ZeroLocusStatus::SignCaseOutOfScope;
    return result;
  }
  ZeroLocus locus;
  const Eigen::Index m = static_cast<Eigen::Index>(c.outer.size()) - 1;
  const Eigen::Index n = c.form.num_vars();
  locus.matrix.resize(m, n);
  const Exponent& a0 = c.outer[0].first;
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      locus.matrix(i, j) = c.outer[static_cast<std::size_t>(i) + 1].first[j] - a0[j];
  for (std::size_t i = 0; i < c.outer.size(); ++i) locus.rhs_symbolic.emplace_back(c.barycentric[i], c.outer[i].second);
  locus.dimension = static_cast<int>(n - exact_rank<Rational>(locus.matrix));
  result.status = ZeroLocusStatus::Locus;
  result.locus = std::move(locus);
  return result;
}

bool logs_affinely_independent(const std::vector<Eigen::VectorXd>& points) {
  if (points.empty()) return true;
  const Eigen::Index n = points.front().size();
  for (const auto& p : points) {
    if (p.size() != n) throw DimensionMismatch("points of different lengths");
    for (Eigen::Index i = 0; i < n; ++i)
      if (p[i] == 0.0) throw ZeroCoordinate("point with a zero coordinate has no logarithm");
  }
  if (points.size() == 1) return true;
  if (static_cast<Eigen::Index>(points.size()) > n + 1) return false;
  const auto k = static_cast<Eigen::Index>(points.size()) - 1;
  Eigen::MatrixXd diff(n, k);
  const Eigen::VectorXd base = points.front().cwiseAbs().array().log().matrix();
  for (Eigen::Index j = 0; j < k; ++j)
    diff.col(j) = points[static_cast<std::size_t>(j) + 1].cwiseAbs().array().log().matrix() - base;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(diff);
  const auto& sigma = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    if (sigma[i] > 1e-9) ++rank;
  return rank == k;
}

std::optional<RationalVector> find_negative_witness(const Circuit& c, unsigned seed) {
  if (c.kind != CircuitKind::ProperCircuit) return std::nullopt;
  const Eigen::Index n = c.form.num_vars();
  auto negative = [&](const RationalVector& x) { return evaluate<Rational>(c.form, x) < 0; };

  // On the AM-GM equality set the outer terms add up to Theta * |x^beta|, so
  // f(x) = (Theta - |f_beta|) |x^beta| once x^beta has the sign opposite to f_beta.
  ZeroLocus locus;
  const Eigen::Index m = static_cast<Eigen::Index>(c.outer.size()) - 1;
  locus.matrix.resize(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      locus.matrix(i, j) = c.outer[static_cast<std::size_t>(i) + 1].first[j] - c.outer[0].first[j];
  for (std::size_t i = 0; i < c.outer.size(); ++i) locus.rhs_symbolic.emplace_back(c.barycentric[i], c.outer[i].second);
  Eigen::VectorXd x = locus.particular_solution().array().exp().matrix();
  if (c.inner->second > 0) {
    const Exponent& beta = c.inner->first;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (beta[j] % 2 != 0) {
        x[j] = -x[j];
        break;
      }
    }
  }
  if (x.allFinite()) {
    for (long long cap : {1000LL, 1000000LL, 1000000000LL}) {
      RationalVector q(n);
      for (Eigen::Index j = 0; j < n; ++j) q[j] = rational_approximation(x[j], cap);
      if (negative(q)) return q;
    }
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    RationalVector q(n);
    for (Eigen::Index j = 0; j < n; ++j) q[j] = make_rational(Integer(coord(rng)), Integer(1 + attempt % 3));
    if (negative(q)) return q;
  }
  return std::nullopt;
}

}  // namespace sonckit
