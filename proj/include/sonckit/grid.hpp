#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sonckit/form.hpp"

namespace sonckit {

/// X = {-1,0,1}^2 x {1}, Xprime = {-2,0,2}^2 x {1}, Y = {0,1}^3 x {1}.
enum class NamedGrid { X, Xprime, Y };

std::string to_string(NamedGrid g);
std::optional<NamedGrid> parse_grid_name(const std::string& name);

/// Points in lexicographic order of their coordinates.
std::vector<RationalVector> grid_points(NamedGrid g);

struct GridEntry {
  RationalVector point;
  Rational value;
};

struct GridReport {
  NamedGrid grid = NamedGrid::X;
  std::vector<GridEntry> entries;
  std::size_t zeros = 0;
};

/// Exact evaluation at every grid point. Throws DimensionMismatch.
GridReport evaluate_grid(const SparseForm& f, NamedGrid g);

std::string point_string(const RationalVector& p);

}  // namespace sonckit
