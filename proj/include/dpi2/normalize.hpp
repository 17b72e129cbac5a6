#pragma once

#include <array>
#include <utility>
#include <vector>

#include "dpi2/homotopy.hpp"

namespace dpi2 {

// Generator of pi_2(S2) on I_{4,4}, and its mirror.
GridMap canonical_T();
GridMap canonical_T_inverse();
// T.T...T (|c| factors, T^-1 when c < 0); constant on I_{0,0} for c = 0.
GridMap normal_form_map(int c);

struct Island {
  int a = 0, b = 0;          // centre, value e1
  std::array<int, 8> ring{};  // counter-clockwise from (a+1, b)
};

struct IslandReport {
  Island island;
  int cls = 0;
};

struct NormalForm {
  int plus_count = 0;
  int minus_count = 0;
  std::vector<IslandReport> islands;  // as found right after isolation
  Certificate cert;                   // input ~ normal_form_map(class), extended
  int cls() const { return plus_count - minus_count; }
};

// Subdivide by k, apply the block-junction adjustments, then flood with
// e2, e3, -e1. Afterwards e1 values are pairwise more than k - 2 apart and
// every cell outside the 3x3 blocks around them is -e1.
std::pair<GridMap, Certificate> isolate_e1(const GridMap& f, int k = 5);

// Islands of a map in isolated form; e1 centres must be at least 4 apart.
std::vector<Island> find_islands(const GridMap& g);
int classify_island(const Island& isl);

// Zero islands are erased, +1 / -1 islands are rewritten to exact T / T^-1.
std::pair<GridMap, Certificate> reduce_islands(const GridMap& g, const std::vector<Island>& islands);

NormalForm normalize(const GridMap& f, int k = 5);
std::pair<int, Certificate> pi2_class(const GridMap& f, int k = 5);

// product(f, inverse(f)) ~ constant.
Certificate cancel_certificate(const GridMap& f);

}  // namespace dpi2
