#include "dpi2/gridmap.hpp"

#include <string>

namespace dpi2 {

GridMap::GridMap(ImagePtr codomain, int basepoint, Rect rect)
    : img_(std::move(codomain)), base_(basepoint), rect_(rect) {
  if (!img_) throw std::domain_error("map needs a codomain");
  if (rect.m < 0 || rect.n < 0) throw std::domain_error("rectangle bounds must be >= 0");
  if (basepoint < 0 || std::size_t(basepoint) >= img_->size())
    throw std::domain_error("basepoint not in codomain");
  v_.assign(rect.size(), basepoint);
}

GridMap::GridMap(ImagePtr codomain, int basepoint, Rect rect, std::vector<int> values)
    : GridMap(std::move(codomain), basepoint, rect) {
  if (values.size() != rect.size()) throw std::domain_error("value array has wrong length");
  v_ = std::move(values);
  validate();
}

bool GridMap::boundary_pinned() const {
  for (int a = 0; a <= m(); ++a)
    if (at(a, 0) != base_ || at(a, n()) != base_) return false;
  for (int b = 0; b <= n(); ++b)
    if (at(0, b) != base_ || at(m(), b) != base_) return false;
  return true;
}

void GridMap::validate() const {
  if (!boundary_pinned()) throw precondition_error("boundary is not pinned to the basepoint");
  if (!is_continuous(*this)) throw precondition_error("map is not continuous");
}

bool GridMap::operator==(const GridMap& o) const {
  return same_codomain(*img_, *o.img_) && base_ == o.base_ && rect_ == o.rect_ && v_ == o.v_;
}

bool same_codomain(const DigitalImage& x, const DigitalImage& y) {
  if (&x == &y) return true;
  if (x.name() != y.name() || x.points() != y.points()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x.adj(i, j) != y.adj(i, j)) return false;
  return true;
}

GridMap constant_map(Rect rect, ImagePtr codomain, int basepoint) {
  return GridMap(std::move(codomain), basepoint, rect);
}

GridMap trivial_extend(const GridMap& f, int m2, int n2) {
  if (m2 < f.m() || n2 < f.n()) throw std::domain_error("trivial extension cannot shrink the domain");
  GridMap g(f.codomain_ptr(), f.basepoint(), {m2, n2});
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a) g.set(a, b, f.at(a, b));
  return g;
}

GridMap apply_alpha(const GridMap& f, int i) {
  if (i < 0 || i > f.m()) throw std::domain_error("column index out of range");
  GridMap g(f.codomain_ptr(), f.basepoint(), {f.m() + 1, f.n()});
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m() + 1; ++a) g.set(a, b, f.at(a <= i ? a : a - 1, b));
  return g;
}

GridMap apply_beta(const GridMap& f, int j) {
  if (j < 0 || j > f.n()) throw std::domain_error("row index out of range");
  GridMap g(f.codomain_ptr(), f.basepoint(), {f.m(), f.n() + 1});
  for (int b = 0; b <= f.n() + 1; ++b)
    for (int a = 0; a <= f.m(); ++a) g.set(a, b, f.at(a, b <= j ? b : b - 1));
  return g;
}

GridMap subdivide(const GridMap& f, int k) {
  if (k < 1) throw std::domain_error("subdivision factor must be >= 1");
  GridMap g(f.codomain_ptr(), f.basepoint(), {k * f.m() + k - 1, k * f.n() + k - 1});
  for (int b = 0; b <= g.n(); ++b)
    for (int a = 0; a <= g.m(); ++a) g.set(a, b, f.at(a / k, b / k));
  return g;
}

GridMap product(const GridMap& f, const GridMap& g) {
  if (!same_codomain(f.codomain(), g.codomain()) || f.basepoint() != g.basepoint())
    throw std::domain_error("product needs a common codomain and basepoint");
  GridMap h(f.codomain_ptr(), f.basepoint(), {f.m() + g.m() + 1, f.n() + g.n() + 1});
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a) h.set(a, b, f.at(a, b));
  for (int b = 0; b <= g.n(); ++b)
    for (int a = 0; a <= g.m(); ++a) h.set(a + f.m() + 1, b + f.n() + 1, g.at(a, b));
  return h;
}

GridMap inverse(const GridMap& f) {
  GridMap g(f.codomain_ptr(), f.basepoint(), f.rect());
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a) g.set(a, b, f.at(f.m() - a, b));
  return g;
}

GridMap transpose(const GridMap& f) {
  GridMap g(f.codomain_ptr(), f.basepoint(), {f.n(), f.m()});
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a) g.set(b, a, f.at(a, b));
  return g;
}

static void check_subrect(const GridMap& f, const SubRect& r) {
  if (r.a_lo < 0 || r.b_lo < 0 || r.a_lo > r.a_hi || r.b_lo > r.b_hi || r.a_hi > f.m() || r.b_hi > f.n())
    throw std::domain_error("subrectangle outside the domain");
}

static bool border_is_base(const GridMap& f, const SubRect& r) {
  for (int a = r.a_lo; a <= r.a_hi; ++a)
    if (f.at(a, r.b_lo) != f.basepoint() || f.at(a, r.b_hi) != f.basepoint()) return false;
  for (int b = r.b_lo; b <= r.b_hi; ++b)
    if (f.at(r.a_lo, b) != f.basepoint() || f.at(r.a_hi, b) != f.basepoint()) return false;
  return true;
}

GridMap paste(const GridMap& f, const SubRect& r, const GridMap& g) {
  check_subrect(f, r);
  if (r.width() != g.m() || r.height() != g.n()) throw precondition_error("pasted map does not fit the subrectangle");
  if (!same_codomain(f.codomain(), g.codomain()) || f.basepoint() != g.basepoint())
    throw precondition_error("pasted map has a different codomain or basepoint");
  if (!border_is_base(f, r)) throw precondition_error("target border is not at the basepoint");
  if (!g.boundary_pinned()) throw precondition_error("pasted map boundary is not at the basepoint");
  GridMap h = f;
  for (int b = 0; b <= g.n(); ++b)
    for (int a = 0; a <= g.m(); ++a) h.set(r.a_lo + a, r.b_lo + b, g.at(a, b));
  return h;
}

GridMap restrict_to(const GridMap& f, const SubRect& r) {
  check_subrect(f, r);
  if (!border_is_base(f, r)) throw precondition_error("subrectangle border is not at the basepoint");
  GridMap g(f.codomain_ptr(), f.basepoint(), {r.width(), r.height()});
  for (int b = 0; b <= g.n(); ++b)
    for (int a = 0; a <= g.m(); ++a) g.set(a, b, f.at(r.a_lo + a, r.b_lo + b));
  return g;
}

GridMap border_wrap(const GridMap& f, int x1) {
  const auto& img = f.codomain();
  if (x1 < 0 || std::size_t(x1) >= img.size()) throw std::domain_error("new basepoint not in codomain");
  if (!img.adj(std::size_t(x1), std::size_t(f.basepoint())))
    throw precondition_error("new basepoint must be adjacent to the old one");
  GridMap g(f.codomain_ptr(), x1, {f.m() + 2, f.n() + 2});
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a) g.set(a + 1, b + 1, f.at(a, b));
  return g;
}

GridMap map_compose(const std::vector<int>& phi, const ImagePtr& target, const GridMap& f) {
  const auto& x = f.codomain();
  if (phi.size() != x.size()) throw precondition_error("value table must cover the whole codomain");
  for (int y : phi)
    if (y < 0 || std::size_t(y) >= target->size()) throw precondition_error("value table leaves the target image");
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x.adj(i, j) && !target->adj(std::size_t(phi[i]), std::size_t(phi[j])))
        throw precondition_error("value table is not continuous");
  GridMap g(target, phi[std::size_t(f.basepoint())], f.rect());
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a) g.set(a, b, phi[std::size_t(f.at(a, b))]);
  return g;
}

std::pair<GridMap, GridMap> product_split(const GridMap& alpha) {
  const auto& xy = alpha.codomain();
  if (!xy.factor_x() || !xy.factor_y()) throw std::domain_error("codomain is not a product image");
  const int ny = int(xy.factor_y()->size());
  GridMap f(xy.factor_x(), alpha.basepoint() / ny, alpha.rect());
  GridMap g(xy.factor_y(), alpha.basepoint() % ny, alpha.rect());
  for (int b = 0; b <= alpha.n(); ++b)
    for (int a = 0; a <= alpha.m(); ++a) {
      f.set(a, b, alpha.at(a, b) / ny);
      g.set(a, b, alpha.at(a, b) % ny);
    }
  return {f, g};
}

GridMap product_combine(const GridMap& f, const GridMap& g, ImagePtr xy) {
  if (!xy) xy = make_product(f.codomain_ptr(), g.codomain_ptr());
  if (!xy->factor_x() || !xy->factor_y() || !same_codomain(*xy->factor_x(), f.codomain()) ||
      !same_codomain(*xy->factor_y(), g.codomain()))
    throw std::domain_error("product image does not match the factors");
  const int ny = int(g.codomain().size());
  const int base = f.basepoint() * ny + g.basepoint();
  GridMap h1(xy, base, f.rect()), h2(xy, base, g.rect());
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a) h1.set(a, b, f.at(a, b) * ny + g.basepoint());
  for (int b = 0; b <= g.n(); ++b)
    for (int a = 0; a <= g.m(); ++a) h2.set(a, b, f.basepoint() * ny + g.at(a, b));
  return product(h1, h2);
}

}  // namespace dpi2
