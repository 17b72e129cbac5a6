#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dpi2/gridmap.hpp"

namespace dpi2 {

struct SpiderMove {
  int a = 0, b = 0;
  int value = 0;
  bool operator==(const SpiderMove&) const = default;
};

// Witness of an extension homotopy: both endpoints live on one common
// rectangle (the trivial extensions of the original maps), and the moves turn
// start into end one cell at a time.
struct Certificate {
  GridMap start;
  std::vector<SpiderMove> moves;
  GridMap end;

  const Rect& rect() const { return start.rect(); }
};

enum class Axis { Col, Row };

bool spider_valid(const GridMap& f, const SpiderMove& mv);
GridMap apply_spider(const GridMap& f, const SpiderMove& mv);
bool one_step_check(const GridMap& f, const GridMap& g);
// Raster order: b ascending, then a.
std::vector<SpiderMove> decompose_one_step(const GridMap& f, const GridMap& g);

// f_b: interior x becomes b unless some z ~ x has f(z) not adjacent to b
// (on S2 that is exactly f(z) = -b).
GridMap flood_map(const GridMap& f, int b);
std::pair<GridMap, std::vector<SpiderMove>> flood(const GridMap& f, int b);

// f o alpha_from ~ f o alpha_to on I_{m+1,n} (rows with Axis::Row).
Certificate doubling_trace(const GridMap& f, int from_i, int to_i, Axis axis = Axis::Col);
Certificate translate_trace(const GridMap& f, const SubRect& r, int da, int db);

struct Verdict {
  bool ok = true;
  long failed_move = -1;  // index into moves, -1 when the failure is not a move
  std::string reason;
  explicit operator bool() const { return ok; }
};

Verdict verify_certificate(const Certificate& c);

Certificate extend_certificate(const Certificate& c, int m, int n);
// c1 then c2; c1's end and c2's start must agree after extension.
Certificate chain(const Certificate& c1, const Certificate& c2);
Certificate reverse(const Certificate& c);

// Incremental certificate builder. Every emitted move is checked on the spot;
// an invalid one means a construction bug and raises std::logic_error.
// Coordinates are absolute, so growing the rectangle never invalidates
// earlier moves.
class Tracer {
 public:
  explicit Tracer(const GridMap& start);

  const GridMap& current() const { return cur_; }
  const Rect& rect() const { return cur_.rect(); }
  std::size_t size() const { return moves_.size(); }

  void grow(int m, int n);
  void spider(int a, int b, int v);
  // Emits a move only if the value changes.
  bool set(int a, int b, int v);
  void one_step_to(const GridMap& g);
  void append(const std::vector<SpiderMove>& moves, int da = 0, int db = 0);

  // Line dst := line src over [lo, hi] of the other coordinate.
  void copy_line(Axis axis, int dst, int src, int lo, int hi);
  // Trace from h o alpha_last to h o alpha_i, i.e. duplicate line i, where
  // lines last and last + 1 carry the basepoint. Lines are restricted to
  // [lo, hi] of the other coordinate.
  void double_line(Axis axis, int i, int last, int lo, int hi);
  // Inverse of double_line: lines p and p + 1 are equal, line last is base.
  void remove_duplicate(Axis axis, int p, int last, int lo, int hi);
  // Slide block r by (da, db) in unit steps, horizontal first.
  void translate(const SubRect& r, int da, int db);

  Certificate finish() const { return {start_, moves_, cur_}; }

 private:
  int get(Axis axis, int line, int t) const { return axis == Axis::Col ? cur_.at(line, t) : cur_.at(t, line); }
  void put(Axis axis, int line, int t, int v) { axis == Axis::Col ? (void)set(line, t, v) : (void)set(t, line, v); }

  GridMap start_;
  GridMap cur_;
  std::vector<SpiderMove> moves_;
};

}  // namespace dpi2
