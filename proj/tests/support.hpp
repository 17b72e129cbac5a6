#pragma once

// Reference implementations used as test oracles. They work from raw
// coordinates and label vectors, not from the library's tables.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dpi2/cli.hpp"
#include "dpi2/gridmap.hpp"
#include "dpi2/homotopy.hpp"
#include "dpi2/io.hpp"
#include "dpi2/sphere.hpp"

namespace testing {

using namespace dpi2;

inline std::string data_path(const std::string& name) { return std::string(DPI2_TEST_DATA) + "/" + name; }
inline GridMap load(const std::string& name) { return parse_dmap(read_file(data_path(name))); }

// Unit vector of an S2 label.
inline std::array<int, 3> s2_vec(int l) {
  std::array<int, 3> v{0, 0, 0};
  v[std::size_t(l % 3)] = l < 3 ? 1 : -1;
  return v;
}

// Every pair of cells at Chebyshev distance <= 1 must land on adjacent points.
inline bool brute_continuous(const GridMap& f) {
  const auto& img = f.codomain();
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a)
      for (int b2 = 0; b2 <= f.n(); ++b2)
        for (int a2 = 0; a2 <= f.m(); ++a2)
          if (std::abs(a - a2) <= 1 && std::abs(b - b2) <= 1 &&
              !adjacent(img, img.point(std::size_t(f.at(a, b))), img.point(std::size_t(f.at(a2, b2)))))
            return false;
  return true;
}

// Orientation of a triangle whose labels are e1, e2, e3 in some order is the
// determinant of the three label vectors; other triangles count 0.
inline int det_sign(int l0, int l1, int l2) {
  if (l0 >= 3 || l1 >= 3 || l2 >= 3 || l0 == l1 || l1 == l2 || l0 == l2) return 0;
  const auto u = s2_vec(l0), v = s2_vec(l1), w = s2_vec(l2);
  return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0]);
}

inline int brute_degree(const GridMap& f) {
  int d = 0;
  for (int b = 0; b < f.n(); ++b)
    for (int a = 0; a < f.m(); ++a) {
      d += det_sign(f.at(a, b), f.at(a + 1, b), f.at(a + 1, b + 1));
      d += det_sign(f.at(a, b), f.at(a + 1, b + 1), f.at(a, b + 1));
    }
  return d;
}

// Closed-form flood on S2: interior x -> b unless a neighbour carries -b.
inline GridMap brute_flood(const GridMap& f, int b) {
  GridMap g = f;
  const int nb = (b + 3) % 6;
  for (int y = 1; y < f.n(); ++y)
    for (int x = 1; x < f.m(); ++x) {
      bool blocked = false;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) blocked = blocked || f.at(x + dx, y + dy) == nb;
      if (!blocked) g.set(x, y, b);
    }
  return g;
}

// Replays moves one at a time, checking each step with the brute continuity test.
inline bool brute_replay(const Certificate& c) {
  if (!(c.start.rect() == c.end.rect())) return false;
  GridMap g = c.start;
  for (const auto& mv : c.moves) {
    if (!g.rect().contains(mv.a, mv.b) || g.rect().on_boundary(mv.a, mv.b)) return false;
    const int old = g.at(mv.a, mv.b);
    if (!g.codomain().adj(std::size_t(old), std::size_t(mv.value))) return false;
    g.set(mv.a, mv.b, mv.value);
    if (!brute_continuous(g)) return false;
  }
  return g.values() == c.end.values();
}

inline GridMap random_map(std::uint64_t seed, int m, int n, int moves = 200) {
  return gen_random(seed, m, n, moves, 0);
}

// Random valid spider move, or nullopt-equivalent {-1,-1,-1} after many tries.
inline SpiderMove random_valid_move(std::mt19937_64& rng, const GridMap& f) {
  if (f.m() < 2 || f.n() < 2) return {-1, -1, -1};
  std::uniform_int_distribution<int> ca(1, f.m() - 1), cb(1, f.n() - 1), cv(0, 5);
  for (int t = 0; t < 1000; ++t) {
    SpiderMove mv{ca(rng), cb(rng), cv(rng)};
    if (mv.value != f.at(mv.a, mv.b) && spider_valid(f, mv)) return mv;
  }
  return {-1, -1, -1};
}

}  // namespace testing
