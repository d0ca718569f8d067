#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sonckit/circuit.hpp"
#include "sonckit/exponent.hpp"

namespace sonckit {

enum class SimplexClass { MSimplex, HSimplex, Intermediate, NotSimplicial };

std::string to_string(SimplexClass c);

/// Maximal Delta-mediated set: the largest L with Delta in L in Mid(L) u Delta,
/// inside the lattice points of conv(Delta).
struct MediatedSet {
  ExponentSet delta;
  ExponentSet star;
  ExponentSet lattice;
  ExponentSet mid_delta;
  SimplexClass classification = SimplexClass::NotSimplicial;
};

/// {(s + t) / 2 : s, t even points of L, s != t}
ExponentSet mid_set(const ExponentSet& points);

/// Delta in L and every point of L \ Delta is a midpoint of two distinct even points of L.
bool is_mediated(const ExponentSet& delta, const ExponentSet& l);

struct MediatedOptions {
  /// Randomizes the deletion order; the fixpoint does not depend on it.
  std::optional<unsigned> shuffle_seed;
};

/// Deletes non-midpoints from conv(Delta) lattice points until stable.
/// Throws OddPointInDelta.
MediatedSet maximal_mediated_set(const ExponentSet& delta, const MediatedOptions& options = {});

/// For a nonnegative circuit: sum of squares iff the inner exponent lies in
/// the maximal mediated set of its outer exponents. Throws NotNonnegativeCircuit.
bool circuit_is_sos(const Circuit& c, const MediatedSet& mms);

/// Parses "4,2,0; 2,4,0; 0,0,6". Throws ParseError or DimensionMismatch.
ExponentSet parse_point_list(std::string_view text);

}  // namespace sonckit
