#include "dpi2/grid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dpi2/gridmap.hpp"

namespace dpi2 {

bool lattice_adjacent(const Point& p, const Point& q, int qmax) {
  if (p.size() != q.size()) return false;
  int diff = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    auto d = p[k] - q[k];
    if (d > 1 || d < -1) return false;
    if (d != 0) ++diff;
  }
  return diff <= qmax;
}

DigitalImage::DigitalImage(std::string name, std::vector<Point> points, AdjacencyKind adj)
    : name_(std::move(name)), points_(std::move(points)), adj_(std::move(adj)) {
  if (points_.empty()) throw std::domain_error("digital image must be nonempty");
  dim_ = points_.front().size();
  if (dim_ == 0) throw std::domain_error("points must have dimension >= 1");
  std::set<Point> seen;
  for (const auto& p : points_) {
    if (p.size() != dim_) throw std::domain_error("point dimension mismatch in image " + name_);
    if (!seen.insert(p).second) throw std::domain_error("duplicate point in image " + name_);
  }
  const std::size_t n = points_.size();
  matrix_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) matrix_[i * n + i] = 1;
  if (adj_.kind == AdjacencyKind::Kind::Lattice) {
    if (adj_.q < 1 || std::size_t(adj_.q) > dim_)
      throw std::domain_error("c_q adjacency needs 1 <= q <= dim");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (lattice_adjacent(points_[i], points_[j], adj_.q)) matrix_[i * n + j] = matrix_[j * n + i] = 1;
  } else {
    // Closed under symmetry and reflexivity; self loops in the input are fine.
    for (auto [i, j] : adj_.edges) {
      if (i >= n || j >= n) throw std::domain_error("edge endpoint out of range in image " + name_);
      matrix_[i * n + j] = matrix_[j * n + i] = 1;
    }
  }
  masks_.assign(n, 0);
  if (n <= 64)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (this->adj(i, j)) masks_[i] |= std::uint64_t(1) << j;
}

int DigitalImage::index_of(const Point& p) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == p) return int(i);
  return -1;
}

std::vector<std::pair<std::size_t, std::size_t>> DigitalImage::edge_list() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (adj(i, j)) out.emplace_back(i, j);
  return out;
}

bool adjacent(const DigitalImage& img, const Point& p, const Point& q) {
  int i = img.index_of(p), j = img.index_of(q);
  if (i < 0 || j < 0) throw std::domain_error("point not in image " + img.name());
  return img.adj(std::size_t(i), std::size_t(j));
}

bool rect_adjacent(const Point& p, const Point& q) {
  if (p.size() != 2 || q.size() != 2) return false;
  return lattice_adjacent(p, q, 2);
}

std::vector<Point> boundary(const Rect& r) {
  std::vector<Point> out;
  for (int b = 0; b <= r.n; ++b)
    for (int a = 0; a <= r.m; ++a)
      if (r.on_boundary(a, b)) out.push_back({a, b});
  return out;
}

ImagePtr make_product(const ImagePtr& x, const ImagePtr& y) {
  std::vector<Point> pts;
  pts.reserve(x->size() * y->size());
  for (const auto& p : x->points())
    for (const auto& q : y->points()) {
      Point r = p;
      r.insert(r.end(), q.begin(), q.end());
      pts.push_back(std::move(r));
    }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t ny = y->size();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (x->adj(i / ny, j / ny) && y->adj(i % ny, j % ny)) edges.emplace_back(i, j);
  auto img = std::make_shared<DigitalImage>(x->name() + "x" + y->name(), std::move(pts),
                                            AdjacencyKind::explicit_edges(std::move(edges)));
  img->fx_ = x;
  img->fy_ = y;
  return img;
}

bool is_continuous(const GridMap& f) {
  const auto& img = f.codomain();
  const auto& v = f.values();
  for (int x : v)
    if (x < 0 || std::size_t(x) >= img.size()) throw std::domain_error("map value outside codomain");
  const int m = f.m(), n = f.n();
  // Each unordered 8-neighbour pair is visited once via these four offsets.
  static constexpr int da[4] = {1, 0, 1, 1}, db[4] = {0, 1, 1, -1};
  for (int b = 0; b <= n; ++b)
    for (int a = 0; a <= m; ++a)
      for (int k = 0; k < 4; ++k) {
        int a2 = a + da[k], b2 = b + db[k];
        if (a2 > m || b2 < 0 || b2 > n) continue;
        if (!img.adj(std::size_t(f.at(a, b)), std::size_t(f.at(a2, b2)))) return false;
      }
  return true;
}

}  // namespace dpi2
