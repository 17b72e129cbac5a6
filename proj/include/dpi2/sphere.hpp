#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "dpi2/grid.hpp"

namespace dpi2 {

// Underlying values are the point indices inside make_sphere(2).
enum class S2 : int { PlusE1 = 0, PlusE2, PlusE3, MinusE1, MinusE2, MinusE3 };

inline constexpr std::array<S2, 6> kAllS2 = {S2::PlusE1,  S2::PlusE2,  S2::PlusE3,
                                             S2::MinusE1, S2::MinusE2, S2::MinusE3};
inline constexpr int kS2Base = int(S2::MinusE1);

constexpr S2 antipode(S2 l) { return S2((int(l) + 3) % 6); }
constexpr bool s2_adjacent(S2 a, S2 b) { return b != antipode(a); }
constexpr int s2_axis(S2 l) { return int(l) % 3 + 1; }
constexpr bool s2_positive(S2 l) { return int(l) < 3; }

// Points +e_1..+e_{n+1}, then -e_1..-e_{n+1}, with c_n adjacency.
ImagePtr make_sphere(int n);
// Shared instance of make_sphere(2), named "S2".
const ImagePtr& sphere2();
bool is_s2(const DigitalImage& img);

// File tokens: 1 2 3 -1 -2 -3, with "." accepted for -1.
std::string s2_token(S2 l);
std::optional<S2> parse_s2_token(std::string_view tok);

}  // namespace dpi2
