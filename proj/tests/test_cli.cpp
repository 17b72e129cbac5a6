#include <cstdio>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "dpi2/degree.hpp"
#include "dpi2/normalize.hpp"
#include "support.hpp"

using namespace dpi2;
using namespace testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dpi2");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("dpi2_test_" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("degree") {
    const Run r = cli({"degree", data_path("T.dmap")});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    CHECK(cli({"degree", data_path("T_inverse.dmap")}).out == "-1\n");
  }

  TEST_CASE("check") {
    CHECK(cli({"check", data_path("fig12_left.dmap")}).code == 0);
    const std::string bad = tmp("bad.dmap");
    write_file(bad, "dmap v1 w=2 h=2 codomain=S2 basepoint=-1\n. . .\n. 1 .\n. . .\n");
    const Run r = cli({"check", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 3") != std::string::npos);
  }

  TEST_CASE("verify") {
    const Run ok = cli({"verify", data_path("empty.dcert")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "ok 0 moves\n");
    const Run bad = cli({"verify", data_path("bad_move.dcert")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL line 11") == 0);
  }

  TEST_CASE("normalize writes a verifying certificate") {
    const std::string cert = tmp("fig5.dcert");
    const Run r = cli({"normalize", data_path("fig5.dmap"), "--cert", cert});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
    CHECK(cli({"verify", cert}).code == 0);
    CHECK(cli({"normalize", data_path("T.dmap"), "--k", "6"}).out == "1\n");
    CHECK(cli({"normalize", data_path("T.dmap"), "--k", "3"}).code != 0);
  }

  TEST_CASE("usage errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"degree"}).code == 2);
    CHECK(cli({"degree", data_path("T.dmap"), "--bogus"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"degree", "/nonexistent/file.dmap"}).code != 0);
  }

  TEST_CASE("gen") {
    const Run a = cli({"gen", "--seed", "42", "--width", "12", "--height", "11", "--moves", "300", "--plant", "2"});
    const Run b = cli({"gen", "--seed", "42", "--width", "12", "--height", "11", "--moves", "300", "--plant", "2"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const GridMap f = parse_dmap(a.out);
    CHECK(triangle_count(f) == 2);
    CHECK(cli({"gen", "--seed", "43", "--width", "12", "--height", "11", "--moves", "300"}).out != a.out);
    const GridMap three = gen_random(5, 14, 14, 0, 3);
    CHECK(triangle_count(three) == 3);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) CHECK(triangle_count(gen_random(seed, 8, 8, 500, 0)) == 0);
    CHECK(cli({"gen", "--width", "3", "--height", "3", "--plant", "1"}).code == 1);
  }

  TEST_CASE("oracle") {
    const std::string c = tmp("const.dmap"), cert = tmp("oracle.dcert");
    write_file(c, write_dmap(constant_map({4, 4}, sphere2(), kS2Base)));
    const Run r = cli({"oracle", data_path("fig5.dmap"), c, "--pad", "6x5", "--max-states", "20000000", "--cert", cert});
    CHECK(r.out == "equivalent\n");
    CHECK(r.code == 0);
    CHECK(cli({"verify", cert}).code == 0);
    const Run u = cli({"oracle", data_path("T.dmap"), c, "--pad", "4x4"});
    CHECK(u.out == "unknown\n");
    CHECK(cli({"oracle", data_path("T.dmap"), c, "--pad", "banana"}).code == 2);
  }

  TEST_CASE("render") {
    const Run a = cli({"render", data_path("T.dmap")});
    CHECK(a.code == 0);
    CHECK(a.out.find('.') != std::string::npos);
    CHECK(a.out.find("-3") != std::string::npos);
    CHECK(a.out.find("\x1b[") == std::string::npos);
    const Run s = cli({"render", data_path("T.dmap"), "--format", "svg", "--triangulation", "--cell-size", "10"});
    CHECK(s.code == 0);
    CHECK(s.out.find("<svg") != std::string::npos);
    CHECK(s.out.find("</svg>") != std::string::npos);
    CHECK(cli({"render", data_path("T.dmap"), "--format", "png"}).code == 2);
    RenderSpec colored;
    colored.color = true;
    CHECK(render(canonical_T(), colored).find("\x1b[") != std::string::npos);
  }

  TEST_CASE("op subcommands") {
    const std::string T = data_path("T.dmap"), out = tmp("op.dmap");
    auto degree_of = [&](const std::vector<std::string>& args) {
      std::vector<std::string> a = args;
      a.insert(a.begin(), "op");
      a.push_back("-o");
      a.push_back(out);
      const Run r = cli(a);
      REQUIRE_MESSAGE(r.code == 0, r.err);
      return triangle_count(parse_dmap(read_file(out)));
    };
    CHECK(degree_of({"extend", T, "--width", "7", "--height", "6"}) == 1);
    CHECK(degree_of({"alpha", T, "--i", "2"}) == 1);
    CHECK(degree_of({"beta", T, "--j", "0"}) == 1);
    CHECK(degree_of({"subdivide", T, "--k", "3"}) == 1);
    CHECK(degree_of({"product", T, T}) == 2);
    CHECK(degree_of({"inverse", T}) == -1);
    CHECK(degree_of({"flood", data_path("fig12_left.dmap"), "--value", "-1"}) == 0);
    CHECK(read_file(out) == read_file(data_path("fig12_right.dmap")).substr(read_file(data_path("fig12_right.dmap")).find("dmap")));
    CHECK(degree_of({"compose", T, "--table", "2:3,3:2,-2:-3,-3:-2"}) == -1);

    const std::string big = tmp("big.dmap");
    write_file(big, write_dmap(constant_map({12, 8}, sphere2(), kS2Base)));
    CHECK(degree_of({"paste", big, T, "--at", "2,2"}) == 1);
    const Run tr = cli({"op", "translate", out, "--block", "3,5,3,5", "--by", "4,1"});
    REQUIRE(tr.code == 0);
    const Certificate moved = parse_dcert(tr.out).cert;
    CHECK(verify_certificate(moved).ok);
    CHECK(moved.end.at(8, 5) == int(S2::PlusE1));

    const Run w = cli({"op", "border-wrap", T, "--value", "2"});
    CHECK(w.code == 0);
    CHECK(w.out.find("basepoint=2") != std::string::npos);

    const Run dt = cli({"op", "doubling-trace", T, "--from", "4", "--to", "0"});
    CHECK(dt.code == 0);
    CHECK(dt.out.find("dcert v1") == 0);
    const Run cancel = cli({"op", "cancel", T});
    CHECK(cancel.code == 0);
    CHECK(verify_certificate(parse_dcert(cancel.out).cert).ok);

    const std::string pair = tmp("pair.dmap");
    REQUIRE(cli({"op", "combine", T, data_path("T_inverse.dmap"), "-o", pair}).code == 0);
    const Run first = cli({"op", "split", pair, "--part", "1"});
    CHECK(triangle_count(parse_dmap(first.out)) == 1);
    const Run second = cli({"op", "split", pair, "--part", "2"});
    CHECK(triangle_count(parse_dmap(second.out)) == -1);
  }

  TEST_CASE("custom images") {
    const std::string f = tmp("c4.dmap");
    write_file(f, "dmap v1 w=4 h=4 codomain=C4 basepoint=0\n. . . . .\n. 1 1 1 .\n. 1 2 1 .\n. 1 1 1 .\n. . . . .\n");
    CHECK(cli({"--image", data_path("cycle4.dimg"), "check", f}).code == 0);
    CHECK(cli({"check", f}).code == 1);
    CHECK(cli({"--image", data_path("cycle4.dimg"), "degree", f}).code == 1);
  }
}
