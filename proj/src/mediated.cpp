#include "sonckit/mediated.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "sonckit/geometry.hpp"
#include "sonckit/linalg.hpp"

namespace sonckit {

std::string to_string(SimplexClass c) {
  switch (c) {
    case SimplexClass::MSimplex: return "MSimplex";
    case SimplexClass::HSimplex: return "HSimplex";
    case SimplexClass::Intermediate: return "Intermediate";
    case SimplexClass::NotSimplicial: return "NotSimplicial";
  }
  return "?";
}

ExponentSet mid_set(const ExponentSet& points) {
  ExponentList even;
  for (const auto& p : points)
    if (is_even(p)) even.push_back(p);
  ExponentSet out;
  for (std::size_t i = 0; i < even.size(); ++i)
    for (std::size_t j = i + 1; j < even.size(); ++j) out.insert((even[i] + even[j]) / 2);
  return out;
}

namespace {

bool is_midpoint_in(const Exponent& q, const ExponentSet& l) {
  for (const auto& s : l) {
    if (!is_even(s) || s == q) continue;
    const Exponent t = 2 * q - s;
    if (t != s && l.count(t)) return true;
  }
  return false;
}

}  // namespace

bool is_mediated(const ExponentSet& delta, const ExponentSet& l) {
  for (const auto& d : delta)
    if (!l.count(d)) return false;
  for (const auto& q : l)
    if (!delta.count(q) && !is_midpoint_in(q, l)) return false;
  return true;
}

MediatedSet maximal_mediated_set(const ExponentSet& delta, const MediatedOptions& options) {
  MediatedSet out;
  out.delta = delta;
  if (delta.empty()) return out;
  const Eigen::Index n = delta.begin()->size();
  for (const auto& d : delta) {
    if (d.size() != n) throw DimensionMismatch("points of different lengths");
    if (!is_even(d)) throw OddPointInDelta("point " + to_string(d) + " has odd entries");
  }
  const ExponentList list(delta.begin(), delta.end());
  const bool simplicial = affinely_independent(list);
  out.lattice = simplicial ? lattice_points(list) : hull_lattice_points(delta);
  out.mid_delta = mid_set(delta);

  ExponentSet l = out.lattice;
  std::vector<Exponent> initial;
  for (const auto& q : l)
    if (!delta.count(q)) initial.push_back(q);
  if (options.shuffle_seed) {
    std::mt19937 rng(*options.shuffle_seed);
    std::shuffle(initial.begin(), initial.end(), rng);
  }
  std::deque<Exponent> work(initial.begin(), initial.end());
  while (!work.empty()) {
    const Exponent q = work.front();
    work.pop_front();
    if (!l.count(q) || is_midpoint_in(q, l)) continue;
    l.erase(q);
    if (!is_even(q)) continue;
    // Midpoints witnessed by q may have lost their only witness pair.
    for (const auto& s : l) {
      if (!is_even(s)) continue;
      const Exponent m = (q + s) / 2;
      if (!delta.count(m) && l.count(m)) work.push_back(m);
    }
  }
  out.star = std::move(l);

  if (!simplicial) {
    out.classification = SimplexClass::NotSimplicial;
  } else if (out.star == out.lattice) {
    out.classification = SimplexClass::HSimplex;
  } else {
    ExponentSet lower = delta;
    lower.insert(out.mid_delta.begin(), out.mid_delta.end());
    out.classification = out.star == lower ? SimplexClass::MSimplex : SimplexClass::Intermediate;
  }
  return out;
}

bool circuit_is_sos(const Circuit& c, const MediatedSet& mms) {
  if (!decide_circuit_nonnegativity(c).nonnegative)
    throw NotNonnegativeCircuit("the SOS test applies to nonnegative circuits only");
  if (c.kind == CircuitKind::MonomialSquareSum) return true;
  if (c.inner->second > 0 && is_even(c.inner->first)) return true;  // every term is a monomial square
  const auto outer = c.outer_exponents();
  if (ExponentSet(outer.begin(), outer.end()) != mms.delta)
    throw DimensionMismatch("mediated set was computed for a different vertex set");
  return mms.star.count(c.inner->first) > 0;
}

ExponentSet parse_point_list(std::string_view text) {
  ExponentSet out;
  std::string s(text);
  std::stringstream points(s);
  std::string item;
  Eigen::Index n = -1;
  std::size_t offset = 0;
  while (std::getline(points, item, ';')) {
    std::vector<int> coords;
    std::stringstream fields(item);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const auto b = field.find_first_not_of(" \t");
      const auto e = field.find_last_not_of(" \t");
      if (b == std::string::npos) throw ParseError("empty coordinate", offset);
      const std::string token = field.substr(b, e - b + 1);
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw ParseError("bad coordinate \"" + token + "\"", offset);
      if (v < 0) throw ParseError("negative coordinate \"" + token + "\"", offset);
      coords.push_back(v);
    }
    offset += item.size() + 1;
    if (coords.empty()) {
      if (item.find_first_not_of(" \t") == std::string::npos) continue;
      throw ParseError("empty point", offset);
    }
    if (n >= 0 && static_cast<Eigen::Index>(coords.size()) != n)
      throw DimensionMismatch("points of different lengths");
    n = static_cast<Eigen::Index>(coords.size());
    out.insert(Eigen::Map<const Exponent>(coords.data(), n));
  }
  if (out.empty()) throw ParseError("no points given", 0);
  return out;
}

}  // namespace sonckit
