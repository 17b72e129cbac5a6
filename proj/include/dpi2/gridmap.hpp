#pragma once

#include <utility>
#include <vector>

#include "dpi2/grid.hpp"

namespace dpi2 {

struct SubRect {
  int a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;
  int width() const { return a_hi - a_lo; }
  int height() const { return b_hi - b_lo; }
  bool operator==(const SubRect&) const = default;
};

// Based map (I_{m,n}, boundary) -> (X, x0). Values are codomain point indices,
// stored row-major with (a, b) at b * (m + 1) + a.
//
// Operations in this header return new maps and check their inputs. The raw
// set() is for builders that maintain the invariants themselves (spider-move
// tracers, parsers); call validate() when in doubt.
class GridMap {
 public:
  GridMap(ImagePtr codomain, int basepoint, Rect rect);
  GridMap(ImagePtr codomain, int basepoint, Rect rect, std::vector<int> values);

  int m() const { return rect_.m; }
  int n() const { return rect_.n; }
  const Rect& rect() const { return rect_; }
  const DigitalImage& codomain() const { return *img_; }
  const ImagePtr& codomain_ptr() const { return img_; }
  int basepoint() const { return base_; }
  const std::vector<int>& values() const { return v_; }

  int at(int a, int b) const { return v_[std::size_t(b) * std::size_t(rect_.m + 1) + std::size_t(a)]; }
  void set(int a, int b, int x) { v_[std::size_t(b) * std::size_t(rect_.m + 1) + std::size_t(a)] = x; }

  bool boundary_pinned() const;
  // Throws precondition_error unless boundary_pinned() and is_continuous().
  void validate() const;

  // Same codomain object, basepoint, rectangle and values.
  bool operator==(const GridMap& o) const;

 private:
  ImagePtr img_;
  int base_;
  Rect rect_;
  std::vector<int> v_;
};

bool same_codomain(const DigitalImage& x, const DigitalImage& y);

GridMap constant_map(Rect rect, ImagePtr codomain, int basepoint);
GridMap trivial_extend(const GridMap& f, int m2, int n2);
GridMap apply_alpha(const GridMap& f, int i);
GridMap apply_beta(const GridMap& f, int j);
GridMap subdivide(const GridMap& f, int k);
GridMap product(const GridMap& f, const GridMap& g);
GridMap inverse(const GridMap& f);
GridMap transpose(const GridMap& f);
GridMap paste(const GridMap& f, const SubRect& r, const GridMap& g);
// The block of f on r as a map on I_{w,h}; r's border must carry the basepoint.
GridMap restrict_to(const GridMap& f, const SubRect& r);
GridMap border_wrap(const GridMap& f, int x1);
// phi[i] is the image of codomain point i in target.
GridMap map_compose(const std::vector<int>& phi, const ImagePtr& target, const GridMap& f);

std::pair<GridMap, GridMap> product_split(const GridMap& alpha);
// (f, c_{y0}) . (c_{x0}, g). Pass xy to reuse an existing product image.
GridMap product_combine(const GridMap& f, const GridMap& g, ImagePtr xy = nullptr);

}  // namespace dpi2
