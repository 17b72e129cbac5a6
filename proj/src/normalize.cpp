#include "dpi2/normalize.hpp"

#include <algorithm>
#include <string>

#include "dpi2/degree.hpp"
#include "dpi2/sphere.hpp"

namespace dpi2 {

namespace {

constexpr int E1 = int(S2::PlusE1), E2 = int(S2::PlusE2), E3 = int(S2::PlusE3);
constexpr int NE1 = int(S2::MinusE1), NE2 = int(S2::MinusE2), NE3 = int(S2::MinusE3);

constexpr int kRingDa[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kRingDb[8] = {0, 1, 1, 1, 0, -1, -1, -1};

void require_s2_based(const GridMap& f) {
  if (!is_s2(f.codomain()) || f.basepoint() != NE1)
    throw std::domain_error("expected a map into S2 based at -e1");
}

[[noreturn]] void bug(const std::string& what) { throw std::logic_error("internal error: " + what); }

// ---- isolation ----

void fill_around(Tracer& t, int a, int b) {
  for (int db = -1; db <= 1; ++db)
    for (int da = -1; da <= 1; ++da) t.set(a + da, b + db, E1);
}

void isolate_stage(Tracer& t, int k) {
  const GridMap f = t.current();
  const int m = f.m(), n = f.n();
  const int km = k * m + k - 1, kn = k * n + k - 1;
  t.grow(km, kn);

  // Subdivision as a chain of doubling traces, right-most line first so the
  // lines still to be doubled never move.
  int last = m;
  for (int c = m; c >= 0; --c)
    for (int r = 1; r < k; ++r) t.double_line(Axis::Col, c, last++, 1, n - 1);
  last = n;
  for (int c = n; c >= 0; --c)
    for (int r = 1; r < k; ++r) t.double_line(Axis::Row, c, last++, 1, km - 1);
  if (!(t.current() == subdivide(f, k))) bug("subdivision trace did not reach f o rho_k");

  // Junction of pixels (i,j),(i+1,j),(i,j+1),(i+1,j+1); (ax, by) is the lower
  // left cell of the top right pixel.
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      const bool bl = f.at(i, j) == E1, br = f.at(i + 1, j) == E1;
      const bool tl = f.at(i, j + 1) == E1, tr = f.at(i + 1, j + 1) == E1;
      if (int(bl) + int(br) + int(tl) + int(tr) != 2) continue;
      const int ax = (i + 1) * k, by = (j + 1) * k;
      if (tl && br) {
        fill_around(t, ax - 1, by);
        fill_around(t, ax, by - 1);
      } else if (tr && bl) {
        fill_around(t, ax, by);
        fill_around(t, ax - 1, by - 1);
      } else if (tl && tr) {  // open below: two cells left of the seam
        t.set(ax - 1, by - 1, E1);
        t.set(ax - 2, by - 1, E1);
      } else if (bl && br) {  // open above: right of the seam
        t.set(ax, by, E1);
        t.set(ax + 1, by, E1);
      } else if (tl && bl) {  // open right: below the seam
        t.set(ax, by - 1, E1);
        t.set(ax, by - 2, E1);
      } else {  // tr && br, open left: above the seam
        t.set(ax - 1, by, E1);
        t.set(ax - 1, by + 1, E1);
      }
    }

  for (int b : {E2, E3, NE1}) t.one_step_to(flood_map(t.current(), b));
}

void check_isolated(const GridMap& g, int sep) {
  for (int b = 0; b <= g.n(); ++b)
    for (int a = 0; a <= g.m(); ++a) {
      if (g.at(a, b) == E1) {
        for (int y = std::max(0, b - sep); y <= std::min(g.n(), b + sep); ++y)
          for (int x = std::max(0, a - sep); x <= std::min(g.m(), a + sep); ++x)
            if ((x != a || y != b) && g.at(x, y) == E1)
              bug("e1 values at (" + std::to_string(a) + "," + std::to_string(b) + ") and (" +
                  std::to_string(x) + "," + std::to_string(y) + ") are not isolated");
        continue;
      }
      if (g.at(a, b) == NE1) continue;
      bool near = false;
      for (int y = std::max(0, b - 1); y <= std::min(g.n(), b + 1); ++y)
        for (int x = std::max(0, a - 1); x <= std::min(g.m(), a + 1); ++x) near = near || g.at(x, y) == E1;
      if (!near) bug("value outside every island is not the basepoint");
    }
}

// ---- islands ----

int ring_cell_a(const Island& i, int r) { return i.a + kRingDa[r]; }
int ring_cell_b(const Island& i, int r) { return i.b + kRingDb[r]; }


// Corner moves that leave the four-value form: each corner takes the value
// of the edge cell following it counter-clockwise.
void simplify_ring(Tracer& t, int a, int b) {
  t.set(a - 1, b + 1, t.current().at(a - 1, b));
  t.set(a - 1, b - 1, t.current().at(a, b - 1));
  t.set(a + 1, b - 1, t.current().at(a + 1, b));
  t.set(a + 1, b + 1, t.current().at(a, b + 1));
}

// A class-zero ring may wind forward and back over the whole equator; its
// four-value form cannot, so some equatorial value is missing there.
void erase_zero_island(Tracer& t, const Island& isl) {
  simplify_ring(t, isl.a, isl.b);
  std::array<int, 8> ring{};
  for (int r = 0; r < 8; ++r) ring[r] = t.current().at(ring_cell_a(isl, r), ring_cell_b(isl, r));
  int v = -1;
  for (int c : {E2, E3, NE2, NE3})
    if (std::find(ring.begin(), ring.end(), c) == ring.end()) {
      v = c;
      break;
    }
  if (v < 0) bug("zero island uses all four equatorial values");
  const int nv = int(antipode(S2(v)));
  for (int r = 0; r < 8; ++r) t.set(ring_cell_a(isl, r), ring_cell_b(isl, r), nv);
  t.set(isl.a, isl.b, nv);
  for (int r = 0; r < 8; ++r) t.set(ring_cell_a(isl, r), ring_cell_b(isl, r), NE1);
  t.set(isl.a, isl.b, NE1);
}

struct Extent {
  int a_lo, a_hi, b_hi;
};

Extent content_extent(const GridMap& g) {
  Extent e{g.m(), 0, 0};
  for (int b = 0; b <= g.n(); ++b)
    for (int a = 0; a <= g.m(); ++a)
      if (g.at(a, b) != g.basepoint()) {
        e.a_lo = std::min(e.a_lo, a);
        e.a_hi = std::max(e.a_hi, a);
        e.b_hi = std::max(e.b_hi, b);
      }
  return e;
}

// (x,y,z,w) -> (w,x,y,z) on a simplified island: double the centre row,
// move the values one step round the 10-cell ring in five pairs, collapse.
void rotate_island(Tracer& t, int cx, int cy) {
  const Extent e = content_extent(t.current());
  const int last = e.b_hi + 1;
  if (last + 1 > t.rect().n) t.grow(t.rect().m, last + 1);
  t.double_line(Axis::Row, cy, last, e.a_lo, e.a_hi);

  const GridMap& g = t.current();
  const int x = g.at(cx - 1, cy), y = g.at(cx, cy - 1), z = g.at(cx + 1, cy), w = g.at(cx, cy + 2);
  t.spider(cx - 1, cy + 2, w);  // top left
  t.spider(cx + 1, cy - 1, y);  // bottom right
  t.spider(cx - 1, cy - 1, x);  // bottom left
  t.spider(cx + 1, cy + 2, z);  // top right
  t.spider(cx - 1, cy + 1, w);  // upper left edge
  t.spider(cx + 1, cy, y);      // lower right edge
  t.spider(cx, cy - 1, x);      // bottom edge
  t.spider(cx, cy + 2, z);      // top edge
  t.spider(cx - 1, cy, w);      // lower left edge
  t.spider(cx + 1, cy + 1, y);  // upper right edge

  t.remove_duplicate(Axis::Row, cy, last + 1, e.a_lo, e.a_hi);
}

using Form = std::array<int, 4>;  // values at L, B, R, T after simplification

Form rotated(const Form& f) { return {f[3], f[0], f[1], f[2]}; }

void reduce_signed_island(Tracer& t, const Island& isl, int cls) {
  const int a = isl.a, b = isl.b;
  simplify_ring(t, a, b);

  const GridMap& g = t.current();
  Form form{g.at(a - 1, b), g.at(a, b - 1), g.at(a + 1, b), g.at(a, b + 1)};
  const Form target = cls > 0 ? Form{E2, E3, NE2, NE3} : Form{NE2, E3, E2, NE3};
  int turns = 0;
  while (form != target && turns < 4) {
    form = rotated(form);
    ++turns;
  }
  if (form != target) bug("island form is not a rotation of the target");
  for (int r = 0; r < turns; ++r) rotate_island(t, a, b);

  if (cls < 0) {  // undo the corner moves of T^-1
    t.set(a + 1, b + 1, E2);
    t.set(a + 1, b - 1, E3);
    t.set(a - 1, b - 1, NE2);
    t.set(a - 1, b + 1, NE3);
  }
}

struct Placed {
  int a, b, cls;
};

std::vector<Placed> reduce_stage(Tracer& t, const std::vector<Island>& islands) {
  std::vector<Placed> out;
  for (const auto& isl : islands) {
    const int cls = classify_island(isl);
    if (cls == 0)
      erase_zero_island(t, isl);
    else {
      reduce_signed_island(t, isl, cls);
      out.push_back({isl.a, isl.b, cls});
    }
  }
  const GridMap T = canonical_T(), Ti = canonical_T_inverse();
  for (const auto& p : out) {
    const GridMap& ref = p.cls > 0 ? T : Ti;
    for (int db = -1; db <= 1; ++db)
      for (int da = -1; da <= 1; ++da)
        if (t.current().at(p.a + da, p.b + db) != ref.at(2 + da, 2 + db)) bug("island not in canonical form");
  }
  return out;
}

// ---- arrangement and cancellation ----

// Window [x0, x0+2m+1] x [y0, y0+n] holds (f | f^-1); collapse it to the
// basepoint through g_m, g_{m-1}, ..., g_0.
void collapse_mirror(Tracer& t, int x0, int y0, int m, int n) {
  const int lo = y0 + 1, hi = y0 + n - 1, last = x0 + 2 * m + 1;
  t.remove_duplicate(Axis::Col, x0 + m, last, lo, hi);
  for (int k = m; k >= 1; --k) {
    t.copy_line(Axis::Col, x0 + k, x0 + k - 1, lo, hi);
    t.remove_duplicate(Axis::Col, x0 + k, last, lo, hi);
    t.remove_duplicate(Axis::Col, x0 + k - 1, last, lo, hi);
  }
}

SubRect block_at(int a, int b) { return {a - 1, a + 1, b - 1, b + 1}; }

// Islands are exact T / T^-1 blocks at least 4 apart. Stack the surplus sign
// on the diagonal, park T / T^-1 pairs side by side above it, then cancel the
// pairs.
int arrange_stage(Tracer& t, std::vector<Placed> isl) {
  std::vector<std::size_t> plus, minus;
  for (std::size_t i = 0; i < isl.size(); ++i) (isl[i].cls > 0 ? plus : minus).push_back(i);
  const int c = int(plus.size()) - int(minus.size());
  const int s = std::abs(c);
  const std::size_t pairs = std::min(plus.size(), minus.size());
  const auto& surplus = c >= 0 ? plus : minus;

  std::vector<std::array<int, 2>> target(isl.size());
  for (int i = 0; i < s; ++i) target[surplus[pairs + std::size_t(i)]] = {5 * i + 2, 5 * i + 2};
  for (std::size_t j = 0; j < pairs; ++j) {
    const int x = 5 * (s + 2 * int(j)) + 2, y = 5 * (s + int(j)) + 2;
    target[plus[j]] = {x, y};
    target[minus[j]] = {x + 5, y};
  }
  if (isl.empty()) return 0;

  int max_a = 0, max_b = 0;
  for (std::size_t i = 0; i < isl.size(); ++i) {
    max_a = std::max({max_a, isl[i].a, target[i][0]});
    max_b = std::max({max_b, isl[i].b, target[i][1]});
  }
  const int N = int(isl.size());
  const int right = max_a + 5, stage = max_b + 5;
  t.grow(right + 5 * (N - 1) + 3, stage + 5 * (N - 1) + 3);

  std::vector<std::size_t> order(isl.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return isl[p].a > isl[q].a; });

  auto move = [&](Placed& p, int a, int b) {
    t.translate(block_at(p.a, p.b), a - p.a, b - p.b);
    p.a = a;
    p.b = b;
  };
  for (int i = 0; i < N; ++i) {
    auto& p = isl[order[std::size_t(i)]];
    move(p, right + 5 * (N - 1 - i), p.b);
  }
  for (int i = 0; i < N; ++i) {
    auto& p = isl[order[std::size_t(i)]];
    move(p, p.a, stage + 5 * i);
  }
  for (int i = 0; i < N; ++i) {
    auto& p = isl[order[std::size_t(i)]];
    move(p, target[order[std::size_t(i)]][0], p.b);
  }
  for (int i = 0; i < N; ++i) {
    auto& p = isl[order[std::size_t(i)]];
    move(p, p.a, target[order[std::size_t(i)]][1]);
  }

  for (std::size_t j = 0; j < pairs; ++j) {
    const int x = 5 * (s + 2 * int(j)), y = 5 * (s + int(j));
    collapse_mirror(t, x, y, 4, 4);
  }
  return c;
}

}  // namespace

GridMap canonical_T() {
  GridMap t(sphere2(), NE1, {4, 4});
  t.set(1, 1, E3);
  t.set(2, 1, E3);
  t.set(3, 1, NE2);
  t.set(1, 2, E2);
  t.set(2, 2, E1);
  t.set(3, 2, NE2);
  t.set(1, 3, E2);
  t.set(2, 3, NE3);
  t.set(3, 3, NE3);
  return t;
}

GridMap canonical_T_inverse() { return inverse(canonical_T()); }

GridMap normal_form_map(int c) {
  if (c == 0) return constant_map({0, 0}, sphere2(), NE1);
  const GridMap unit = c > 0 ? canonical_T() : canonical_T_inverse();
  GridMap out = unit;
  for (int i = 1; i < std::abs(c); ++i) out = product(out, unit);
  return out;
}

std::pair<GridMap, Certificate> isolate_e1(const GridMap& f, int k) {
  require_s2_based(f);
  if (k < 5) throw precondition_error("isolation needs k >= 5");
  Tracer t(f);
  isolate_stage(t, k);
  check_isolated(t.current(), k - 2);
  return {t.current(), t.finish()};
}

std::vector<Island> find_islands(const GridMap& g) {
  require_s2_based(g);
  std::vector<Island> out;
  std::vector<char> covered(g.values().size(), 0);
  for (int b = 0; b <= g.n(); ++b)
    for (int a = 0; a <= g.m(); ++a) {
      if (g.at(a, b) != E1) continue;
      if (a < 2 || b < 2 || a > g.m() - 2 || b > g.n() - 2)
        throw precondition_error("e1 value too close to the boundary for an island");
      for (int y = std::max(0, b - 3); y <= std::min(g.n(), b + 3); ++y)
        for (int x = std::max(0, a - 3); x <= std::min(g.m(), a + 3); ++x)
          if ((x != a || y != b) && g.at(x, y) == E1)
            throw precondition_error("e1 values closer than 4 at (" + std::to_string(a) + "," +
                                     std::to_string(b) + ")");
      Island isl{a, b, {}};
      for (int r = 0; r < 8; ++r) {
        const int v = g.at(ring_cell_a(isl, r), ring_cell_b(isl, r));
        if (v == E1 || v == NE1) throw precondition_error("island ring contains +-e1");
        isl.ring[std::size_t(r)] = v;
      }
      for (int y = b - 1; y <= b + 1; ++y)
        for (int x = a - 1; x <= a + 1; ++x) covered[std::size_t(y) * std::size_t(g.m() + 1) + std::size_t(x)] = 1;
      out.push_back(isl);
    }
  for (int b = 0; b <= g.n(); ++b)
    for (int a = 0; a <= g.m(); ++a)
      if (!covered[std::size_t(b) * std::size_t(g.m() + 1) + std::size_t(a)] && g.at(a, b) != NE1)
        throw precondition_error("value outside the islands is not the basepoint");
  return out;
}

int classify_island(const Island& isl) {
  GridMap patch(sphere2(), NE1, {4, 4});
  patch.set(2, 2, E1);
  for (int r = 0; r < 8; ++r) {
    const int v = isl.ring[std::size_t(r)];
    if (v == E1 || v == NE1 || v < 0 || v > 5) throw precondition_error("island ring contains +-e1");
    patch.set(2 + kRingDa[r], 2 + kRingDb[r], v);
  }
  if (!is_continuous(patch)) throw precondition_error("island ring is not continuous");
  const int d = triangle_count(patch);
  if (d < -1 || d > 1) throw std::logic_error("invariant violation: island count " + std::to_string(d));
  return d;
}

std::pair<GridMap, Certificate> reduce_islands(const GridMap& g, const std::vector<Island>& islands) {
  require_s2_based(g);
  Tracer t(g);
  reduce_stage(t, islands);
  return {t.current(), t.finish()};
}

NormalForm normalize(const GridMap& f, int k) {
  require_s2_based(f);
  if (k < 5) throw precondition_error("isolation needs k >= 5");
  f.validate();
  Tracer t(f);
  isolate_stage(t, k);
  check_isolated(t.current(), k - 2);

  std::vector<IslandReport> reports;
  int plus = 0, minus = 0;
  const auto islands = find_islands(t.current());
  for (const auto& isl : islands) reports.push_back({isl, classify_island(isl)});
  auto placed = reduce_stage(t, islands);
  for (const auto& p : placed) ++(p.cls > 0 ? plus : minus);

  const int c = arrange_stage(t, std::move(placed));
  const GridMap nfm = normal_form_map(c);
  if (!(t.current() == trivial_extend(nfm, t.rect().m, t.rect().n))) bug("pipeline did not reach the normal form");
  if (c != triangle_count(f)) bug("class disagrees with the triangle count");
  return NormalForm{plus, minus, std::move(reports), t.finish()};
}

std::pair<int, Certificate> pi2_class(const GridMap& f, int k) {
  NormalForm nf = normalize(f, k);
  return {nf.cls(), std::move(nf.cert)};
}

Certificate cancel_certificate(const GridMap& f) {
  f.validate();
  const int m = f.m(), n = f.n();
  Tracer t(product(f, inverse(f)));
  if (m >= 2 && n >= 2) t.translate({m + 2, 2 * m, n + 2, 2 * n}, 0, -(n + 1));
  collapse_mirror(t, 0, 0, m, n);
  if (!(t.current() == constant_map(t.rect(), f.codomain_ptr(), f.basepoint()))) bug("cancellation did not end constant");
  return t.finish();
}

}  // namespace dpi2
