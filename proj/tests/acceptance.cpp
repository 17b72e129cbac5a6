// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "dpi2/degree.hpp"
#include "dpi2/normalize.hpp"
#include "dpi2/oracle.hpp"
#include "support.hpp"

using namespace dpi2;
using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

bool is_constant(const GridMap& g) { return g == constant_map(g.rect(), g.codomain_ptr(), g.basepoint()); }

int run_cli(std::vector<std::string> args, std::string& out) {
  args.insert(args.begin(), "dpi2");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream os, es;
  const int code = run(int(argv.size()), argv.data(), os, es);
  out = os.str();
  return code;
}

// 1. degree of T and of its mirror.
Result c1() {
  Result o;
  std::string out;
  if (run_cli({"degree", data_path("T.dmap")}, out) != 0 || out != "1\n") o.fail("degree T.dmap printed '" + out + "'");
  if (run_cli({"degree", data_path("T_inverse.dmap")}, out) != 0 || out != "-1\n")
    o.fail("degree T_inverse.dmap printed '" + out + "'");
  const GridMap T = load("T.dmap");
  constexpr int reps = 1000;
  int d = 0;
  const auto t0 = Clock::now();
  for (int i = 0; i < reps; ++i) d += triangle_count(T);
  const double per = seconds_since(t0) / reps;
  if (d != reps) o.fail("triangle_count(T) != 1");
  if (per >= 1e-3) o.fail("degree took " + std::to_string(per * 1e3) + " ms");
  o.detail = o.ok ? "d(T) = 1, d(T^-1) = -1, " + std::to_string(per * 1e6) + " us per count" : o.detail;
  return o;
}

// 2. the d = 0 fixture map normalizes to the constant map.
Result c2() {
  Result o;
  const GridMap f = load("fig5.dmap");
  const auto t0 = Clock::now();
  const auto [c, cert] = pi2_class(f);
  const Verdict v = verify_certificate(cert);
  const double s = seconds_since(t0);
  if (triangle_count(f) != 0 || brute_degree(f) != 0) o.fail("degree is not 0");
  if (c != 0) o.fail("class " + std::to_string(c));
  if (!v.ok) o.fail("certificate rejected: " + v.reason);
  if (!is_constant(cert.end)) o.fail("certificate does not end at a constant map");
  if (cert.start != trivial_extend(f, cert.rect().m, cert.rect().n)) o.fail("certificate does not start at the map");
  if (s >= 5.0) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = "class 0, " + std::to_string(cert.moves.size()) + " verified moves, " + std::to_string(s) + " s";
  return o;
}

// 3. flood golden grids.
Result c3() {
  Result o;
  const GridMap left = load("fig12_left.dmap"), right = load("fig12_right.dmap");
  const auto [g, moves] = flood(left, kS2Base);
  int diff = 0;
  for (int b = 0; b <= g.n(); ++b)
    for (int a = 0; a <= g.m(); ++a) diff += g.at(a, b) != right.at(a, b);
  if (diff) o.fail(std::to_string(diff) + " cells differ");
  if (!verify_certificate({left, moves, g}).ok) o.fail("flood certificate rejected");
  if (o.ok) o.detail = "81 cells equal, " + std::to_string(moves.size()) + " certified moves";
  return o;
}

// 4. product adds degrees, inverse negates.
Result c4() {
  Result o;
  constexpr int pairs = 500;
  std::mt19937_64 rng(2024);
  const auto t0 = Clock::now();
  for (int i = 0; i < pairs && o.ok; ++i) {
    auto pick = [&](int salt) {
      const int plant = int(rng() % 5) - 2;
      const int m = 9 + int(rng() % 8), n = 9 + int(rng() % 8);
      return gen_random(rng() + std::uint64_t(salt), m, n, int(rng() % 300), plant);
    };
    const GridMap f = pick(0), g = pick(1);
    const int df = brute_degree(f), dg = brute_degree(g);
    if (triangle_count(product(f, g)) != df + dg) o.fail("pair " + std::to_string(i) + ": product");
    if (triangle_count(inverse(f)) != -df) o.fail("pair " + std::to_string(i) + ": inverse");
  }
  const double s = seconds_since(t0);
  if (s >= 30.0) o.fail("took " + std::to_string(s) + " s");
  if (o.ok) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(s) + " s";
  return o;
}

// 5. spider moves never change the degree.
Result c5() {
  Result o;
  std::mt19937_64 rng(77);
  long moves = 0;
  for (std::uint64_t seed = 1; moves < 10'000 && o.ok; ++seed) {
    GridMap f = gen_random(seed, 12, 12, 100, int(seed % 5) - 2);
    const int d = triangle_count(f);
    for (int k = 0; k < 250 && o.ok; ++k) {
      const SpiderMove mv = random_valid_move(rng, f);
      if (mv.a < 0) break;
      f = apply_spider(f, mv);
      ++moves;
      if (triangle_count(f) != d || brute_degree(f) != d) o.fail("degree changed after move " + std::to_string(moves));
    }
  }
  if (moves < 10'000) o.fail("only " + std::to_string(moves) + " moves generated");
  if (o.ok) o.detail = std::to_string(moves) + " valid moves";
  return o;
}

// 6. pipeline class equals the planted class and the triangle count.
Result c6() {
  Result o;
  constexpr int maps = 200;
  std::mt19937_64 rng(6);
  const auto t0 = Clock::now();
  long total_moves = 0;
  for (int i = 0; i < maps && o.ok; ++i) {
    const int c = int(i % 9) - 4;
    const int m = 20 + int(rng() % 21), n = 20 + int(rng() % 21);
    const int noise = int(rng() % 201);
    const GridMap f = gen_random(rng(), m, n, noise, c);
    const auto [cls, cert] = pi2_class(f);
    const std::string tag = "map " + std::to_string(i) + " (c=" + std::to_string(c) + "): ";
    if (cls != c) o.fail(tag + "class " + std::to_string(cls));
    if (triangle_count(f) != c) o.fail(tag + "triangle count differs");
    const Verdict v = verify_certificate(cert);
    if (!v.ok) o.fail(tag + "certificate rejected: " + v.reason);
    if (cert.end != trivial_extend(normal_form_map(c), cert.rect().m, cert.rect().n))
      o.fail(tag + "certificate does not end at the normal form");
    total_moves += long(cert.moves.size());
  }
  const double s = seconds_since(t0);
  if (s >= 300.0) o.fail("took " + std::to_string(s) + " s");
  if (o.ok)
    o.detail = std::to_string(maps) + " maps up to 40x40, " + std::to_string(total_moves) + " verified moves, " +
               std::to_string(s) + " s";
  return o;
}

// 7. f . f^-1 cancels.
Result c7() {
  Result o;
  std::vector<GridMap> maps{canonical_T()};
  for (std::uint64_t seed : {11u, 12u, 13u}) maps.push_back(gen_random(seed, 12, 10, 200, int(seed % 3) - 1));
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Certificate cert = cancel_certificate(maps[i]);
    const Verdict v = verify_certificate(cert);
    if (!v.ok) o.fail("map " + std::to_string(i) + ": " + v.reason);
    if (!is_constant(cert.end)) o.fail("map " + std::to_string(i) + " does not end constant");
    if (cert.start != product(maps[i], inverse(maps[i]))) o.fail("map " + std::to_string(i) + ": wrong start");
  }
  if (o.ok) o.detail = "T and 3 generated maps";
  return o;
}

// 8. oracle agrees with the degree, its certificates verify, and 4x4 maps of
// degree 0 with an e1 value reach the constant map.
Result c8() {
  Result o;
  const SearchBudget budget{{6, 6}, 2'000'000};
  std::mt19937_64 rng(8);
  std::vector<std::pair<GridMap, GridMap>> pairs;

  auto small = [&](std::uint64_t seed) {
    const int s = 3 + int(seed % 2);
    return gen_random(seed, s, s, 40, 0);
  };
  // Equivalent by construction: a few spider moves apart.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GridMap f = small(seed);
    GridMap g = f;
    for (int k = 0; k < 3; ++k) {
      const SpiderMove mv = random_valid_move(rng, g);
      if (mv.a >= 0) g = apply_spider(g, mv);
    }
    pairs.push_back({f, g});
  }
  // Unrelated small maps.
  for (std::uint64_t seed = 100; seed < 120; ++seed) pairs.push_back({small(seed), small(seed + 1000)});
  // Degree +-1 against small maps: must never come back equivalent.
  for (std::uint64_t seed = 200; seed < 205; ++seed) {
    pairs.push_back({canonical_T(), small(seed)});
    pairs.push_back({canonical_T_inverse(), canonical_T()});
  }

  // Zero islands on I_{4,4}: every ring in the four value form with class 0.
  const int eq[4] = {int(S2::PlusE2), int(S2::PlusE3), int(S2::MinusE2), int(S2::MinusE3)};
  std::vector<GridMap> zero_islands;
  for (int L : eq)
    for (int B : eq)
      for (int R : eq)
        for (int T : eq) {
          GridMap g = constant_map({4, 4}, sphere2(), kS2Base);
          g.set(2, 2, int(S2::PlusE1));
          g.set(1, 2, L), g.set(1, 3, L), g.set(2, 1, B), g.set(1, 1, B);
          g.set(3, 2, R), g.set(3, 1, R), g.set(2, 3, T), g.set(3, 3, T);
          if (is_continuous(g) && triangle_count(g) == 0) zero_islands.push_back(g);
        }
  zero_islands.push_back(load("fig5.dmap"));

  const auto t0 = Clock::now();
  int equivalent = 0, unknown = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [f, g] = pairs[i];
    const OracleResult r = homotopy_decide(f, g, budget);
    if (r.outcome == dpi2::Outcome::Equivalent) {
      ++equivalent;
      if (triangle_count(f) != triangle_count(g)) o.fail("pair " + std::to_string(i) + ": equivalent with unequal d");
      if (!r.cert || !verify_certificate(*r.cert).ok || !brute_replay(*r.cert))
        o.fail("pair " + std::to_string(i) + ": certificate rejected");
    } else {
      ++unknown;
    }
  }
  if (equivalent < 20) o.fail("only " + std::to_string(equivalent) + " equivalent pairs");
  int reached = 0;
  for (const auto& z : zero_islands) {
    const OracleResult r = homotopy_decide(z, constant_map({0, 0}, sphere2(), kS2Base), budget);
    if (r.outcome == dpi2::Outcome::Equivalent && r.cert && verify_certificate(*r.cert).ok && is_constant(r.cert->end))
      ++reached;
  }
  if (reached != int(zero_islands.size()))
    o.fail(std::to_string(zero_islands.size() - std::size_t(reached)) + " degree 0 maps did not reach the constant map");
  const double s = seconds_since(t0);
  if (s >= 600.0) o.fail("took " + std::to_string(s) + " s");
  if (o.ok)
    o.detail = std::to_string(pairs.size()) + " pairs (" + std::to_string(equivalent) + " equivalent, " +
               std::to_string(unknown) + " unknown), " + std::to_string(reached) + " degree 0 maps reached constant, " +
               std::to_string(s) + " s";
  return o;
}

// 9. subdivision keeps d and doubling traces verify.
Result c9() {
  Result o;
  int traces = 0;
  for (std::uint64_t seed = 1; seed <= 40 && o.ok; ++seed) {
    const GridMap f = gen_random(seed, 10, 9, 200, int(seed % 5) - 2);
    const int d = triangle_count(f);
    for (int k : {2, 3}) {
      const GridMap s = subdivide(f, k);
      if (triangle_count(s) != d || brute_degree(s) != d) o.fail("seed " + std::to_string(seed) + ": d changed, k=" + std::to_string(k));
    }
    for (Axis ax : {Axis::Col, Axis::Row}) {
      const int last = ax == Axis::Col ? f.m() : f.n();
      const int from = int(seed % std::uint64_t(last + 1));
      const Certificate c = doubling_trace(f, from, from / 2, ax);
      ++traces;
      if (!verify_certificate(c).ok) o.fail("seed " + std::to_string(seed) + ": trace rejected");
      if (triangle_count(c.start) != d || triangle_count(c.end) != d) o.fail("seed " + std::to_string(seed) + ": endpoint d");
    }
  }
  if (o.ok) o.detail = "80 subdivisions, " + std::to_string(traces) + " traces";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"degree of T and T^-1", c1},
      {"degree-0 fixture map normalizes", c2},
      {"flood golden grids", c3},
      {"homomorphism property", c4},
      {"spider invariance", c5},
      {"pipeline soundness", c6},
      {"inverse law", c7},
      {"oracle cross-validation", c8},
      {"extension and subdivision invariance", c9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
