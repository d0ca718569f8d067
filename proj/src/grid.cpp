#include "sonckit/grid.hpp"

namespace sonckit {

std::string to_string(NamedGrid g) {
  switch (g) {
    case NamedGrid::X: return "X";
    case NamedGrid::Xprime: return "Xprime";
    case NamedGrid::Y: return "Y";
  }
  return "?";
}

std::optional<NamedGrid> parse_grid_name(const std::string& name) {
  if (name == "X") return NamedGrid::X;
  if (name == "Xprime" || name == "X'") return NamedGrid::Xprime;
  if (name == "Y") return NamedGrid::Y;
  return std::nullopt;
}

std::vector<RationalVector> grid_points(NamedGrid g) {
  std::vector<int> values;
  int free_coords = 2;
  switch (g) {
    case NamedGrid::X: values = {-1, 0, 1}; break;
    case NamedGrid::Xprime: values = {-2, 0, 2}; break;
    case NamedGrid::Y:
      values = {0, 1};
      free_coords = 3;
      break;
  }
  std::vector<RationalVector> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(free_coords), 0);
  for (;;) {
    RationalVector p(free_coords + 1);
    for (int i = 0; i < free_coords; ++i) p[i] = values[idx[static_cast<std::size_t>(i)]];
    p[free_coords] = 1;
    out.push_back(std::move(p));
    int i = free_coords - 1;
    while (i >= 0 && ++idx[static_cast<std::size_t>(i)] == values.size()) idx[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

GridReport evaluate_grid(const SparseForm& f, NamedGrid g) {
  GridReport report;
  report.grid = g;
  for (auto& p : grid_points(g)) {
    if (p.size() != f.num_vars())
      throw DimensionMismatch("grid " + to_string(g) + " has " + std::to_string(p.size()) + " coordinates, form has " +
                              std::to_string(f.num_vars()) + " variables");
    Rational v = evaluate<Rational>(f, p);
    if (v == 0) ++report.zeros;
    report.entries.push_back({std::move(p), std::move(v)});
  }
  return report;
}

std::string point_string(const RationalVector& p) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i > 0) s += ",";
    s += to_string(p[i]);
  }
  return s + ")";
}

}  // namespace sonckit
