// Search for cancellation-free SONC decompositions.
//
// Every alpha in S \ R splits its coefficient over the circuits (beta, k)
// whose simplex uses it: weights mu >= 0 summing to one per alpha. Circuit k of
// beta is nonnegative iff nu_k |f_beta| <= Theta_k(mu), and a split of f_beta
// with sum_k nu_k = 1 exists iff |f_beta| <= sum_k Theta_k(mu). So nu is
// eliminated (nu_k proportional to Theta_k) and we minimize
//   phi(mu) = max_beta log |f_beta| - log sum_k Theta_k(mu),
// which is convex in mu because each Theta_k is a weighted geometric mean.
// Feasible iff min phi <= 0.

#include <cmath>
#include <limits>
#include <random>

#include "sonckit/parallel.hpp"
#include "sonckit/sonc.hpp"

namespace sonckit {
namespace {

struct Slot {
  Exponent beta;
  std::size_t beta_index;
  const Simplex* simplex;
  std::vector<std::size_t> mu_index;  // per vertex, index into the flat mu vector
  std::vector<double> lambda;
  std::vector<double> log_base;  // log(f_alpha / lambda)
};

struct Problem {
  std::vector<Slot> slots;
  std::vector<std::vector<std::size_t>> groups;  // mu indices per alpha (simplex constraint)
  std::vector<Exponent> group_alpha;
  std::vector<std::vector<std::size_t>> slots_of_beta;
  std::vector<double> log_abs_beta;
  std::vector<Exponent> betas;
  std::size_t mu_size = 0;
};

Problem build_problem(const SparseForm& f, const SupportPartition& p) {
  Problem prob;
  std::map<Exponent, std::size_t, GrlexDescending> group_of;
  for (const auto& alpha : p.covering_squares()) {
    group_of[alpha] = prob.groups.size();
    prob.groups.emplace_back();
    prob.group_alpha.push_back(alpha);
  }
  for (const auto& beta : p.i_set) {
    const std::size_t bi = prob.betas.size();
    prob.betas.push_back(beta);
    prob.log_abs_beta.push_back(std::log(to_double(abs(f.coefficient(beta)))));
    prob.slots_of_beta.emplace_back();
    for (const auto& simplex : p.simplex_families.at(beta)) {
      Slot s{beta, bi, &simplex, {}, {}, {}};
      for (std::size_t v = 0; v < simplex.vertices.size(); ++v) {
        const auto& alpha = simplex.vertices[v];
        const double lambda = to_double(simplex.barycentric[v]);
        const std::size_t idx = prob.mu_size++;
        prob.groups[group_of.at(alpha)].push_back(idx);
        s.mu_index.push_back(idx);
        s.lambda.push_back(lambda);
        s.log_base.push_back(std::log(to_double(f.coefficient(alpha))) - std::log(lambda));
      }
      prob.slots_of_beta[bi].push_back(prob.slots.size());
      prob.slots.push_back(std::move(s));
    }
  }
  return prob;
}

double log_sum_exp(const std::vector<double>& v) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  if (!std::isfinite(m)) return m;
  double s = 0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

struct Evaluation {
  std::vector<double> log_theta;  // per slot
  std::vector<double> log_total;  // per beta
  std::vector<double> g;          // per beta
  double phi = 0;
  double margin = 0;  // max over slots of Theta_k (|f_beta| / T_beta - 1)
};

Evaluation evaluate_mu(const Problem& prob, const std::vector<double>& log_mu) {
  Evaluation e;
  e.log_theta.resize(prob.slots.size());
  for (std::size_t s = 0; s < prob.slots.size(); ++s) {
    const Slot& slot = prob.slots[s];
    double lt = 0;
    for (std::size_t v = 0; v < slot.mu_index.size(); ++v)
      lt += slot.lambda[v] * (log_mu[slot.mu_index[v]] + slot.log_base[v]);
    e.log_theta[s] = lt;
  }
  e.phi = -std::numeric_limits<double>::infinity();
  e.margin = -std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < prob.betas.size(); ++b) {
    std::vector<double> lts;
    for (auto s : prob.slots_of_beta[b]) lts.push_back(e.log_theta[s]);
    const double lt = log_sum_exp(lts);
    e.log_total.push_back(lt);
    const double g = prob.log_abs_beta[b] - lt;
    e.g.push_back(g);
    e.phi = std::max(e.phi, g);
    for (auto s : prob.slots_of_beta[b]) e.margin = std::max(e.margin, std::exp(e.log_theta[s]) * std::expm1(g));
  }
  return e;
}

// log mu from per-group logits (softmax within each group).
std::vector<double> log_mu_from_logits(const Problem& prob, const std::vector<double>& z) {
  std::vector<double> log_mu(prob.mu_size);
  for (const auto& group : prob.groups) {
    std::vector<double> zs;
    for (auto i : group) zs.push_back(z[i]);
    const double lse = log_sum_exp(zs);
    for (auto i : group) log_mu[i] = z[i] - lse;
  }
  return log_mu;
}

struct StartResult {
  double phi = std::numeric_limits<double>::infinity();
  double margin = std::numeric_limits<double>::infinity();
  std::vector<double> log_mu;
};

StartResult run_start(const Problem& prob, unsigned seed, int iterations) {
  std::vector<double> z(prob.mu_size, 0.0);
  if (seed > 0) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (auto& v : z) v = normal(rng);
  }
  StartResult best;
  std::vector<double> m1(z.size(), 0.0), m2(z.size(), 0.0);
  const double lr = 0.05, b1 = 0.9, b2 = 0.999, eps = 1e-12;
  int since_improvement = 0;
  for (int it = 0; it < iterations; ++it) {
    const auto log_mu = log_mu_from_logits(prob, z);
    const Evaluation e = evaluate_mu(prob, log_mu);
    if (e.phi < best.phi - 1e-13) {
      best.phi = e.phi;
      best.log_mu = log_mu;
      since_improvement = 0;
    } else {
      ++since_improvement;
    }
    best.margin = std::min(best.margin, e.margin);
    if (best.phi < -1e-4 || since_improvement > 5000 || z.empty()) break;

    // Smoothed max over beta: weights softmax(g / tau).
    const double tau = std::max(1e-4, 0.1 * std::pow(0.999, it));
    std::vector<double> scaled(e.g.size());
    for (std::size_t b = 0; b < e.g.size(); ++b) scaled[b] = e.g[b] / tau;
    const double lse = log_sum_exp(scaled);
    // h_i = dF / d log mu_i
    std::vector<double> h(prob.mu_size, 0.0);
    for (std::size_t b = 0; b < prob.betas.size(); ++b) {
      const double w = std::exp(scaled[b] - lse);
      for (auto s : prob.slots_of_beta[b]) {
        const double share = std::exp(e.log_theta[s] - e.log_total[b]);
        const Slot& slot = prob.slots[s];
        for (std::size_t v = 0; v < slot.mu_index.size(); ++v) h[slot.mu_index[v]] -= w * share * slot.lambda[v];
      }
    }
    std::vector<double> grad(z.size(), 0.0);
    for (const auto& group : prob.groups) {
      double sum_h = 0;
      for (auto i : group) sum_h += h[i];
      for (auto i : group) grad[i] = h[i] - std::exp(log_mu[i]) * sum_h;
    }
    const double c1 = 1 - std::pow(b1, it + 1), c2 = 1 - std::pow(b2, it + 1);
    for (std::size_t i = 0; i < z.size(); ++i) {
      m1[i] = b1 * m1[i] + (1 - b1) * grad[i];
      m2[i] = b2 * m2[i] + (1 - b2) * grad[i] * grad[i];
      z[i] -= lr * (m1[i] / c1) / (std::sqrt(m2[i] / c2) + eps);
    }
  }
  if (best.log_mu.empty()) best.log_mu = log_mu_from_logits(prob, z);
  return best;
}

// Rationals summing to exactly one, approximating the given positive weights.
std::optional<std::vector<Rational>> round_simplex(const std::vector<double>& weights) {
  std::vector<Rational> out;
  Rational sum(0);
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    out.push_back(rational_approximation(weights[i], 1000000));
    if (out.back() < 0) return std::nullopt;
    sum += out.back();
  }
  out.push_back(Rational(1) - sum);
  if (out.back() < 0) return std::nullopt;
  return out;
}

std::optional<SoncDecomposition> exact_decomposition(const SparseForm& f, const SupportPartition& p,
                                                     const Problem& prob, const std::vector<double>& log_mu) {
  std::vector<Rational> mu(prob.mu_size);
  for (const auto& group : prob.groups) {
    std::vector<double> w;
    for (auto i : group) w.push_back(std::exp(log_mu[i]));
    const auto r = round_simplex(w);
    if (!r) return std::nullopt;
    for (std::size_t j = 0; j < group.size(); ++j) mu[group[j]] = (*r)[j];
  }
  const Evaluation e = evaluate_mu(prob, log_mu);
  std::vector<SparseForm> summands;
  for (std::size_t b = 0; b < prob.betas.size(); ++b) {
    std::vector<double> shares;
    for (auto s : prob.slots_of_beta[b]) shares.push_back(std::exp(e.log_theta[s] - e.log_total[b]));
    const auto nu = round_simplex(shares);
    if (!nu) return std::nullopt;
    const Rational f_beta = f.coefficient(prob.betas[b]);
    for (std::size_t k = 0; k < prob.slots_of_beta[b].size(); ++k) {
      const Slot& slot = prob.slots[prob.slots_of_beta[b][k]];
      SparseForm::Terms terms;
      for (std::size_t v = 0; v < slot.mu_index.size(); ++v) {
        const auto& alpha = slot.simplex->vertices[v];
        terms.emplace(alpha, mu[slot.mu_index[v]] * f.coefficient(alpha));
      }
      terms.emplace(prob.betas[b], (*nu)[k] * f_beta);
      SparseForm summand(f.num_vars(), f.degree(), std::move(terms));
      if (!summand.is_zero()) summands.push_back(std::move(summand));
    }
  }
  SparseForm::Terms rest;
  for (const auto& alpha : p.r_set) rest.emplace(alpha, f.coefficient(alpha));
  auto d = make_decomposition(summands, SparseForm(f.num_vars(), f.degree(), std::move(rest)));
  if (!d || !verify_decomposition(f, *d).valid()) return std::nullopt;
  return d;
}

}  // namespace

SearchOutcome sonc_feasibility_search(const SparseForm& f, const SupportPartition& partition,
                                      const SearchBudget& budget) {
  if (f.is_zero()) throw ZeroFormInput();
  for (const auto& beta : partition.i_set)
    if (partition.family_size(beta) == 0)
      throw UncoveredInnerExponent("inner exponent " + to_string(beta) + " lies in no simplex of monomial squares");

  const Problem prob = build_problem(f, partition);
  int free_params = 0;
  for (const auto& g : prob.groups) free_params += static_cast<int>(g.size()) - 1;
  for (const auto& s : prob.slots_of_beta) free_params += static_cast<int>(s.size()) - 1;
  if (free_params > budget.max_params)
    throw BudgetExceeded(std::to_string(free_params) + " free parameters exceed the budget of " +
                         std::to_string(budget.max_params));

  SearchOutcome out;
  out.free_params = free_params;
  if (prob.betas.empty()) {
    // A sum of monomial squares: the remainder alone is the decomposition.
    out.status = SearchStatus::Feasible;
    out.decomposition = exact_decomposition(f, partition, prob, {});
    out.exact = out.decomposition.has_value();
    out.objective = -std::numeric_limits<double>::infinity();
    return out;
  }

  const int starts = free_params == 0 ? 1 : std::max(1, budget.seeds);
  std::vector<StartResult> results(static_cast<std::size_t>(starts));
  parallel_for(results.size(), [&](std::size_t i) {
    results[i] = run_start(prob, static_cast<unsigned>(i), budget.iterations);
  });
  const StartResult* best = &results.front();
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& r : results) {
    if (r.phi < best->phi) best = &r;
    margin = std::min(margin, r.margin);
  }
  out.objective = best->phi;
  out.margin = margin;
  double scale = 0;
  for (double l : prob.log_abs_beta) scale = std::max(scale, std::exp(l));
  out.normalized_margin = margin / scale;

  if (best->phi <= 1e-9) {
    // Seeds are tried in order; the first exactly verified rounding wins.
    for (const auto& r : results) {
      if (r.phi > 1e-9) continue;
      if (auto d = exact_decomposition(f, partition, prob, r.log_mu)) {
        out.status = SearchStatus::Feasible;
        out.exact = true;
        out.decomposition = std::move(d);
        return out;
      }
    }
    if (best->phi < -1e-9) {
      out.status = SearchStatus::Feasible;
      out.exact = false;
      return out;
    }
  }
  out.status = out.normalized_margin > budget.infeasibility_margin ? SearchStatus::InfeasibleWithMargin
                                                                    : SearchStatus::Inconclusive;
  return out;
}

}  // namespace sonckit
