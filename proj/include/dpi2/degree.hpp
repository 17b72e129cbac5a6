#pragma once

#include <array>
#include <vector>

#include "dpi2/gridmap.hpp"

namespace dpi2 {

struct OrientedTriangle {
  enum class Kind { Lower, Upper };
  std::array<std::array<int, 2>, 3> v;  // counter-clockwise
  Kind kind;
};

// Positively sloped triangulation, 2mn triangles.
std::vector<OrientedTriangle> triangulate(const Rect& r);

// +1 / -1 / 0 for a counter-clockwise label triple.
int triangle_sign(int l0, int l1, int l2);

// Signed count of <e1,e2,e3> triangles. Codomain must be S2.
int triangle_count(const GridMap& f);

}  // namespace dpi2
