#include "dpi2/sphere.hpp"

namespace dpi2 {

ImagePtr make_sphere(int n) {
  if (n < 1) throw std::domain_error("sphere dimension must be >= 1");
  std::vector<Point> pts;
  for (int sign : {1, -1})
    for (int i = 0; i <= n; ++i) {
      Point p(std::size_t(n + 1), 0);
      p[std::size_t(i)] = sign;
      pts.push_back(std::move(p));
    }
  return std::make_shared<DigitalImage>("S" + std::to_string(n), std::move(pts),
                                        AdjacencyKind::lattice(n));
}

const ImagePtr& sphere2() {
  static const ImagePtr s = make_sphere(2);
  return s;
}

bool is_s2(const DigitalImage& img) {
  if (&img == sphere2().get()) return true;
  if (img.size() != 6 || img.dim() != 3) return false;
  const auto& ref = *sphere2();
  for (std::size_t i = 0; i < 6; ++i)
    if (img.point(i) != ref.point(i)) return false;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (img.adj(i, j) != ref.adj(i, j)) return false;
  return true;
}

std::string s2_token(S2 l) {
  return (s2_positive(l) ? "" : "-") + std::to_string(s2_axis(l));
}

std::optional<S2> parse_s2_token(std::string_view tok) {
  if (tok == ".") return S2::MinusE1;
  bool neg = false;
  if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
    neg = tok[0] == '-';
    tok.remove_prefix(1);
  }
  if (tok.size() != 1 || tok[0] < '1' || tok[0] > '3') return std::nullopt;
  int axis = tok[0] - '1';
  return S2(axis + (neg ? 3 : 0));
}

}  // namespace dpi2
