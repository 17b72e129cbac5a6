#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpi2 {

// Raised when a documented precondition of an operation does not hold.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Point = std::vector<std::int64_t>;

struct Rect {
  int m = 0;
  int n = 0;

  int width() const { return m + 1; }
  int height() const { return n + 1; }
  std::size_t size() const { return std::size_t(m + 1) * std::size_t(n + 1); }
  bool contains(int a, int b) const { return a >= 0 && a <= m && b >= 0 && b <= n; }
  bool on_boundary(int a, int b) const { return a == 0 || b == 0 || a == m || b == n; }
  bool operator==(const Rect&) const = default;
};

struct AdjacencyKind {
  enum class Kind { Lattice, Explicit };
  Kind kind = Kind::Lattice;
  int q = 1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // point indices

  static AdjacencyKind lattice(int q) { return {Kind::Lattice, q, {}}; }
  static AdjacencyKind explicit_edges(std::vector<std::pair<std::size_t, std::size_t>> e) {
    return {Kind::Explicit, 0, std::move(e)};
  }
};

class DigitalImage;
using ImagePtr = std::shared_ptr<const DigitalImage>;

// Finite point set with a reflexive, symmetric adjacency. Points are addressed
// by index everywhere else in the library; the index order is the input order.
class DigitalImage {
 public:
  DigitalImage(std::string name, std::vector<Point> points, AdjacencyKind adj);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(std::size_t i) const { return points_.at(i); }
  const AdjacencyKind& adjacency() const { return adj_; }

  // Index of p, or -1 when p is not in the image.
  int index_of(const Point& p) const;
  bool adj(std::size_t i, std::size_t j) const { return matrix_[i * points_.size() + j] != 0; }
  // Bit j set iff point j ~ point i. Only meaningful for images with <= 64 points.
  std::uint64_t mask(std::size_t i) const { return masks_[i]; }

  // Closed edge list (i < j, self loops omitted), as written to .dimg files.
  std::vector<std::pair<std::size_t, std::size_t>> edge_list() const;

  // Non-null for images built by make_product.
  const ImagePtr& factor_x() const { return fx_; }
  const ImagePtr& factor_y() const { return fy_; }

 private:
  friend ImagePtr make_product(const ImagePtr& x, const ImagePtr& y);

  std::string name_;
  std::size_t dim_ = 0;
  std::vector<Point> points_;
  AdjacencyKind adj_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::uint64_t> masks_;
  ImagePtr fx_, fy_;
};

// c_q rule on raw coordinates.
bool lattice_adjacent(const Point& p, const Point& q, int qmax);

bool adjacent(const DigitalImage& img, const Point& p, const Point& q);
bool rect_adjacent(const Point& p, const Point& q);
std::vector<Point> boundary(const Rect& r);

// Categorical product X x Y; point (i, j) has index i * |Y| + j.
ImagePtr make_product(const ImagePtr& x, const ImagePtr& y);

class GridMap;
bool is_continuous(const GridMap& f);

}  // namespace dpi2
