#include "dpi2/degree.hpp"

#include "dpi2/sphere.hpp"

namespace dpi2 {

namespace {

struct SignTable {
  std::array<signed char, 216> t{};
  SignTable() {
    const int e1 = int(S2::PlusE1), e2 = int(S2::PlusE2), e3 = int(S2::PlusE3);
    auto put = [&](int a, int b, int c, int s) {
      t[std::size_t(a * 36 + b * 6 + c)] = static_cast<signed char>(s);
      t[std::size_t(b * 36 + c * 6 + a)] = static_cast<signed char>(s);
      t[std::size_t(c * 36 + a * 6 + b)] = static_cast<signed char>(s);
    };
    put(e1, e2, e3, 1);
    put(e1, e3, e2, -1);
  }
};

const SignTable kSigns;

}  // namespace

std::vector<OrientedTriangle> triangulate(const Rect& r) {
  std::vector<OrientedTriangle> out;
  if (r.m < 1 || r.n < 1) return out;
  out.reserve(std::size_t(2 * r.m * r.n));
  for (int b = 0; b < r.n; ++b)
    for (int a = 0; a < r.m; ++a) {
      out.push_back({{{{a, b}, {a + 1, b}, {a + 1, b + 1}}}, OrientedTriangle::Kind::Lower});
      out.push_back({{{{a, b}, {a + 1, b + 1}, {a, b + 1}}}, OrientedTriangle::Kind::Upper});
    }
  return out;
}

int triangle_sign(int l0, int l1, int l2) {
  return kSigns.t[std::size_t(l0 * 36 + l1 * 6 + l2)];
}

int triangle_count(const GridMap& f) {
  if (!is_s2(f.codomain())) throw std::domain_error("triangle count needs an S2 codomain");
  int d = 0;
  for (int b = 0; b < f.n(); ++b)
    for (int a = 0; a < f.m(); ++a) {
      const int p = f.at(a, b), q = f.at(a + 1, b), r = f.at(a + 1, b + 1), s = f.at(a, b + 1);
      d += triangle_sign(p, q, r) + triangle_sign(p, r, s);
    }
  return d;
}

}  // namespace dpi2
