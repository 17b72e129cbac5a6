#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dpi2/gridmap.hpp"

namespace dpi2 {

struct RenderSpec {
  enum class Format { Ascii, Svg };
  Format format = Format::Ascii;
  int cell_size = 24;  // svg only
  bool show_triangulation = false;
  bool color = false;  // ascii only
};

std::string render(const GridMap& f, const RenderSpec& spec);

// Constant map with |plant| copies of T (T^-1 if plant < 0) along the
// diagonal, then `moves` random spider moves (uniform over valid moves,
// rejection sampled with a retry cap).
GridMap gen_random(std::uint64_t seed, int m, int n, int moves, int plant);

// Command dispatcher: 0 success, 1 verification or parse failure, 2 usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dpi2
