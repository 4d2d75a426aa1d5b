#pragma once

// Bridge between the polygon picture and the marked-surface picture: a
// triangulation of the d-gon is an ideal triangulation of the disc surface
// (0,(d+2)) whose marked points are the polygon vertices.

#include <utility>
#include <vector>

#include "flipkit/polygon.hpp"
#include "flipkit/surface.hpp"

namespace flipkit::surface {

inline IdealTriangulation from_angulation(const polygon::NAngulation& a) {
  if (a.n != 3) throw argument_error("from_angulation: only triangulations map to surfaces here");
  std::vector<std::pair<int, int>> chords;
  for (const auto& c : a.diagonals) chords.push_back({c.a, c.b});
  return disc_triangulation(a.d, chords, polygon::faces(a.d, a.diagonals));
}

inline MarkedSurface disc_surface(int d) { return build_surface(0, {d + 2}); }

}  // namespace flipkit::surface
