#pragma once

// Northeast shadows of permutation diagrams. A shadowline is kept only as its
// southwest corners, which are exactly the minimal points of the set under
// the componentwise order.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <span>
#include <vector>

#include "patience/core.hpp"

namespace patience {

struct LatticePoint {
  int x;
  int y;

  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
};

/// Southwest corners of a staircase: x strictly increasing, y strictly
/// decreasing.
struct Shadowline {
  std::vector<LatticePoint> corners;

  bool operator==(const Shadowline&) const = default;
};

struct ShadowDiagram {
  std::vector<Shadowline> lines;

  bool operator==(const ShadowDiagram&) const = default;
};

inline std::vector<LatticePoint> diagram_points(const Permutation& sigma) {
  std::vector<LatticePoint> points;
  points.reserve(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    points.push_back({static_cast<int>(i + 1), sigma[i]});
  }
  return points;
}

/// Boundary of the union of northeast shadows of `points`.
/// Requires a nonempty set with distinct abscissae and distinct ordinates.
inline Shadowline shadowline_of(std::span<const LatticePoint> points) {
  if (points.empty()) throw DomainError("shadowline of an empty point set");
  std::set<int> xs, ys;
  for (const auto& p : points) {
    if (p.x < 1 || p.y < 1) throw DomainError("lattice point outside the positive quadrant");
    if (!xs.insert(p.x).second) throw DomainError("repeated abscissa " + std::to_string(p.x));
    if (!ys.insert(p.y).second) throw DomainError("repeated ordinate " + std::to_string(p.y));
  }

  std::vector<LatticePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  // Sweeping by x, a point is minimal iff it lies below everything before it.
  Shadowline line;
  for (const auto& p : sorted) {
    if (line.corners.empty() || p.y < line.corners.back().y) line.corners.push_back(p);
  }
  return line;
}

/// Peels shadowlines off the diagram of sigma until no point remains.
inline ShadowDiagram shadow_diagram(const Permutation& sigma) {
  ShadowDiagram diagram;
  auto remaining = diagram_points(sigma);
  while (!remaining.empty()) {
    auto line = shadowline_of(remaining);
    std::erase_if(remaining, [&](const LatticePoint& p) {
      return std::find(line.corners.begin(), line.corners.end(), p) != line.corners.end();
    });
    diagram.lines.push_back(std::move(line));
  }
  return diagram;
}

/// Corner ordinates per line, ordered along the staircase (top to bottom).
inline std::vector<std::vector<Card>> corner_ordinates(const ShadowDiagram& diagram) {
  std::vector<std::vector<Card>> out;
  for (const auto& line : diagram.lines) {
    auto& row = out.emplace_back();
    for (const auto& c : line.corners) row.push_back(c.y);
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> corner_abscissae(const ShadowDiagram& diagram) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& line : diagram.lines) {
    auto& row = out.emplace_back();
    for (const auto& c : line.corners) row.push_back(static_cast<std::size_t>(c.x));
  }
  return out;
}

}  // namespace patience
