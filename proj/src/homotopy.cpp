#include "dpi2/homotopy.hpp"

#include <algorithm>

namespace dpi2 {

namespace {

bool valid_at(const GridMap& f, int a, int b, int v) {
  if (!f.rect().contains(a, b) || f.rect().on_boundary(a, b)) return false;
  const auto& img = f.codomain();
  if (v < 0 || std::size_t(v) >= img.size()) return false;
  for (int db = -1; db <= 1; ++db)
    for (int da = -1; da <= 1; ++da)
      if (!img.adj(std::size_t(v), std::size_t(f.at(a + da, b + db)))) return false;
  return true;
}

void require_same_shape(const GridMap& f, const GridMap& g) {
  if (f.rect() != g.rect() || f.basepoint() != g.basepoint() || !same_codomain(f.codomain(), g.codomain()))
    throw std::domain_error("maps differ in domain, codomain or basepoint");
}

}  // namespace

bool spider_valid(const GridMap& f, const SpiderMove& mv) { return valid_at(f, mv.a, mv.b, mv.value); }

GridMap apply_spider(const GridMap& f, const SpiderMove& mv) {
  if (!spider_valid(f, mv)) throw precondition_error("invalid spider move");
  GridMap g = f;
  g.set(mv.a, mv.b, mv.value);
  return g;
}

bool one_step_check(const GridMap& f, const GridMap& g) {
  require_same_shape(f, g);
  const auto& img = f.codomain();
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a)
      for (int db = -1; db <= 1; ++db)
        for (int da = -1; da <= 1; ++da) {
          if (!f.rect().contains(a + da, b + db)) continue;
          if (!img.adj(std::size_t(f.at(a, b)), std::size_t(g.at(a + da, b + db)))) return false;
        }
  return true;
}

std::vector<SpiderMove> decompose_one_step(const GridMap& f, const GridMap& g) {
  if (!one_step_check(f, g)) throw precondition_error("maps are not one-step homotopic");
  std::vector<SpiderMove> out;
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a)
      if (f.at(a, b) != g.at(a, b)) out.push_back({a, b, g.at(a, b)});
  return out;
}

GridMap flood_map(const GridMap& f, int b) {
  const auto& img = f.codomain();
  if (b < 0 || std::size_t(b) >= img.size()) throw std::domain_error("flood value not in codomain");
  GridMap g = f;
  for (int y = 1; y < f.n(); ++y)
    for (int x = 1; x < f.m(); ++x) {
      bool ok = true;
      for (int dy = -1; dy <= 1 && ok; ++dy)
        for (int dx = -1; dx <= 1 && ok; ++dx) ok = img.adj(std::size_t(b), std::size_t(f.at(x + dx, y + dy)));
      if (ok) g.set(x, y, b);
    }
  return g;
}

std::pair<GridMap, std::vector<SpiderMove>> flood(const GridMap& f, int b) {
  GridMap g = flood_map(f, b);
  auto moves = decompose_one_step(f, g);
  return {std::move(g), std::move(moves)};
}

Certificate doubling_trace(const GridMap& f, int from_i, int to_i, Axis axis) {
  const int last = axis == Axis::Col ? f.m() : f.n();
  if (to_i < 0 || from_i > last || to_i > from_i) throw precondition_error("need 0 <= to <= from <= last index");
  GridMap start = axis == Axis::Col ? apply_alpha(f, from_i) : apply_beta(f, from_i);
  Tracer t(start);
  const int other = axis == Axis::Col ? f.n() : f.m();
  for (int j = from_i; j > to_i; --j) t.copy_line(axis, j, j - 1, 1, other - 1);
  return t.finish();
}

Certificate translate_trace(const GridMap& f, const SubRect& r, int da, int db) {
  Tracer t(f);
  t.translate(r, da, db);
  return t.finish();
}

Verdict verify_certificate(const Certificate& c) {
  auto fail = [](long i, std::string why) { return Verdict{false, i, std::move(why)}; };
  const GridMap& s = c.start;
  if (s.rect() != c.end.rect() || s.basepoint() != c.end.basepoint() ||
      !same_codomain(s.codomain(), c.end.codomain()))
    return fail(-1, "start and end differ in domain, codomain or basepoint");
  for (const GridMap* g : {&c.start, &c.end}) {
    const char* which = g == &c.start ? "start" : "end";
    try {
      if (!g->boundary_pinned()) return fail(-1, std::string(which) + " map boundary is not at the basepoint");
      if (!is_continuous(*g)) return fail(-1, std::string(which) + " map is not continuous");
    } catch (const std::domain_error& e) {
      return fail(-1, std::string(which) + " map: " + e.what());
    }
  }
  GridMap cur = s;
  for (std::size_t i = 0; i < c.moves.size(); ++i) {
    const auto& mv = c.moves[i];
    if (!cur.rect().contains(mv.a, mv.b)) return fail(long(i), "move outside the domain");
    if (cur.rect().on_boundary(mv.a, mv.b)) return fail(long(i), "move touches the boundary");
    if (!valid_at(cur, mv.a, mv.b, mv.value)) return fail(long(i), "new value not adjacent to the neighbourhood");
    cur.set(mv.a, mv.b, mv.value);
  }
  if (cur.values() != c.end.values()) return fail(-1, "replayed map differs from the recorded end map");
  return {};
}

Certificate extend_certificate(const Certificate& c, int m, int n) {
  return {trivial_extend(c.start, m, n), c.moves, trivial_extend(c.end, m, n)};
}

Certificate chain(const Certificate& c1, const Certificate& c2) {
  const int m = std::max(c1.rect().m, c2.rect().m), n = std::max(c1.rect().n, c2.rect().n);
  Certificate a = extend_certificate(c1, m, n), b = extend_certificate(c2, m, n);
  if (!(a.end == b.start)) throw precondition_error("certificates do not meet");
  a.moves.insert(a.moves.end(), b.moves.begin(), b.moves.end());
  a.end = std::move(b.end);
  return a;
}

Certificate reverse(const Certificate& c) {
  GridMap cur = c.start;
  std::vector<SpiderMove> back;
  back.reserve(c.moves.size());
  for (const auto& mv : c.moves) {
    back.push_back({mv.a, mv.b, cur.at(mv.a, mv.b)});
    cur.set(mv.a, mv.b, mv.value);
  }
  std::reverse(back.begin(), back.end());
  return {c.end, std::move(back), c.start};
}

Tracer::Tracer(const GridMap& start) : start_(start), cur_(start) {}

void Tracer::grow(int m, int n) {
  m = std::max(m, cur_.m());
  n = std::max(n, cur_.n());
  if (m == cur_.m() && n == cur_.n()) return;
  start_ = trivial_extend(start_, m, n);
  cur_ = trivial_extend(cur_, m, n);
}

void Tracer::spider(int a, int b, int v) {
  if (!valid_at(cur_, a, b, v))
    throw std::logic_error("internal error: invalid spider move at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
  cur_.set(a, b, v);
  moves_.push_back({a, b, v});
}

bool Tracer::set(int a, int b, int v) {
  if (cur_.at(a, b) == v) return false;
  spider(a, b, v);
  return true;
}

void Tracer::one_step_to(const GridMap& g0) {
  if (g0.m() > cur_.m() || g0.n() > cur_.n()) grow(g0.m(), g0.n());
  const GridMap g = (g0.rect() == cur_.rect()) ? g0 : trivial_extend(g0, cur_.m(), cur_.n());
  for (int b = 1; b < g.n(); ++b)
    for (int a = 1; a < g.m(); ++a) set(a, b, g.at(a, b));
  if (!(cur_ == g)) throw std::logic_error("internal error: one-step target not reached");
}

void Tracer::append(const std::vector<SpiderMove>& moves, int da, int db) {
  for (const auto& mv : moves) spider(mv.a + da, mv.b + db, mv.value);
}

void Tracer::copy_line(Axis axis, int dst, int src, int lo, int hi) {
  for (int t = lo; t <= hi; ++t) put(axis, dst, t, get(axis, src, t));
}

void Tracer::double_line(Axis axis, int i, int last, int lo, int hi) {
  for (int j = last; j > i; --j) copy_line(axis, j, j - 1, lo, hi);
}

void Tracer::remove_duplicate(Axis axis, int p, int last, int lo, int hi) {
  for (int j = p + 1; j < last; ++j) copy_line(axis, j, j + 1, lo, hi);
}

void Tracer::translate(const SubRect& r0, int da, int db) {
  if (da == 0 && db == 0) return;
  const SubRect box{std::min(r0.a_lo, r0.a_lo + da) - 1, std::max(r0.a_hi, r0.a_hi + da) + 1,
                    std::min(r0.b_lo, r0.b_lo + db) - 1, std::max(r0.b_hi, r0.b_hi + db) + 1};
  if (r0.a_lo > r0.a_hi || r0.b_lo > r0.b_hi || box.a_lo < 0 || box.b_lo < 0 || box.a_hi > cur_.m() ||
      box.b_hi > cur_.n())
    throw precondition_error("translated block must stay inside the domain interior");
  for (int b = box.b_lo; b <= box.b_hi; ++b)
    for (int a = box.a_lo; a <= box.a_hi; ++a) {
      const bool in_r = a >= r0.a_lo && a <= r0.a_hi && b >= r0.b_lo && b <= r0.b_hi;
      if (!in_r && cur_.at(a, b) != cur_.basepoint())
        throw precondition_error("translation path collides with non-basepoint values");
    }
  SubRect r = r0;
  for (; da > 0; --da, ++r.a_lo, ++r.a_hi)
    for (int j = r.a_hi + 1; j >= r.a_lo; --j) copy_line(Axis::Col, j, j - 1, r.b_lo, r.b_hi);
  for (; da < 0; ++da, --r.a_lo, --r.a_hi)
    for (int j = r.a_lo - 1; j <= r.a_hi; ++j) copy_line(Axis::Col, j, j + 1, r.b_lo, r.b_hi);
  for (; db > 0; --db, ++r.b_lo, ++r.b_hi)
    for (int j = r.b_hi + 1; j >= r.b_lo; --j) copy_line(Axis::Row, j, j - 1, r.a_lo, r.a_hi);
  for (; db < 0; ++db, --r.b_lo, --r.b_hi)
    for (int j = r.b_lo - 1; j <= r.b_hi; ++j) copy_line(Axis::Row, j, j + 1, r.a_lo, r.a_hi);
}

}  // namespace dpi2
