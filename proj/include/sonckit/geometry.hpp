#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sonckit/exponent.hpp"
#include "sonckit/form.hpp"
#include "sonckit/rational.hpp"

namespace sonckit {

/// Simplex with an associated relative-interior point beta: affinely
/// independent vertices and the positive barycentric coordinates of beta.
struct Simplex {
  ExponentList vertices;
  std::vector<Rational> barycentric;

  /// Coordinate of `alpha`, zero when alpha is not a vertex.
  Rational coordinate_of(const Exponent& alpha) const;
  bool has_vertex(const Exponent& alpha) const;
};

using SimplexFamilies = std::map<Exponent, std::vector<Simplex>, GrlexDescending>;

/// Partition of a support into monomial squares S, the remaining exponents I,
/// Newton polytope vertices, the unused squares R, and for every beta in I the
/// family of simplices with vertices in S containing beta in their relative
/// interior.
struct SupportPartition {
  ExponentSet s_set;
  ExponentSet i_set;
  ExponentSet vertices;
  ExponentSet r_set;
  SimplexFamilies simplex_families;

  /// N(beta); zero for exponents without a family.
  std::size_t family_size(const Exponent& beta) const;
  /// S \ R
  ExponentSet covering_squares() const;
};

struct GeometryOptions {
  /// Hard cap on candidate vertices per inner exponent.
  std::size_t max_candidates = 22;
};

/// Exponents of monomial squares: all entries even and positive coefficient.
ExponentSet monomial_square_exponents(const SparseForm& f);

SupportPartition support_partition(const SparseForm& f, const GeometryOptions& options = {});

/// Points that are not convex combinations of the others, decided by exact LP.
ExponentSet hull_vertices(const ExponentSet& points);

/// Barycentric coordinates of beta with respect to affinely independent
/// vertices. nullopt when beta is outside the affine hull or any coordinate is
/// not strictly positive. Throws AffinelyDependentInput.
std::optional<std::vector<Rational>> barycentric_coordinates(const Exponent& beta, const ExponentList& vertices);

/// All affinely independent subsets T of candidates with beta in relint conv(T).
/// Ordered lexicographically on the (sorted) vertex lists. Throws CapExceeded.
std::vector<Simplex> enumerate_simplices(const Exponent& beta, const ExponentSet& candidates,
                                         const GeometryOptions& options = {});

/// Integer points of the simplex spanned by affinely independent vertices.
ExponentSet lattice_points(const ExponentList& simplex_vertices);

/// Integer points of conv(points) / divisor for an arbitrary finite point set.
ExponentSet hull_lattice_points(const ExponentSet& points, int divisor = 1);

/// Vertices of (1/2) New(f); throws OddDegree when some vertex is not halvable.
ExponentSet half_newton_vertices(const SparseForm& f);

/// Lattice points of (1/2) New(f): candidate supports of SOS summands.
ExponentSet half_newton_support(const SparseForm& f);

/// Outcome of the vertex test "every vertex of New(f) is a monomial square".
struct PsdPrecheck {
  bool pass = true;
  std::optional<Exponent> witness;  // vertex outside S(f) when !pass
};

PsdPrecheck psd_newton_precheck(const SparseForm& f);

}  // namespace sonckit
