#include <random>

#include "dpi2/cli.hpp"
#include "dpi2/homotopy.hpp"
#include "dpi2/normalize.hpp"
#include "dpi2/sphere.hpp"

namespace dpi2 {

GridMap gen_random(std::uint64_t seed, int m, int n, int moves, int plant) {
  const int need = 5 * std::abs(plant) - 1;
  if (m < 0 || n < 0 || m < need || n < need)
    throw precondition_error("rectangle too small for " + std::to_string(std::abs(plant)) + " planted islands");
  GridMap f = constant_map({m, n}, sphere2(), int(S2::MinusE1));
  const GridMap unit = plant >= 0 ? canonical_T() : canonical_T_inverse();
  for (int i = 0; i < std::abs(plant); ++i) f = paste(f, {5 * i, 5 * i + 4, 5 * i, 5 * i + 4}, unit);
  if (m < 2 || n < 2) return f;

  constexpr int kRetries = 1000;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ca(1, m - 1), cb(1, n - 1), cv(0, 4);
  for (int k = 0; k < moves; ++k)
    for (int tries = 0; tries < kRetries; ++tries) {
      const int a = ca(rng), b = cb(rng);
      int v = cv(rng);
      if (v >= f.at(a, b)) ++v;  // uniform over the five other labels
      if (spider_valid(f, {a, b, v})) {
        f.set(a, b, v);
        break;
      }
    }
  return f;
}

}  // namespace dpi2
