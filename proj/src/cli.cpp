#include "dpi2/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <sstream>

#include "dpi2/degree.hpp"
#include "dpi2/io.hpp"
#include "dpi2/normalize.hpp"
#include "dpi2/oracle.hpp"

namespace dpi2 {

namespace {

std::vector<int> int_list(const std::string& s, std::size_t count, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty()) throw CLI::ValidationError(what, "expected integers, got '" + s + "'");
    out.push_back(v);
  }
  if (out.size() != count) throw CLI::ValidationError(what, "expected " + std::to_string(count) + " comma-separated integers");
  return out;
}

Rect pad_size(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos) throw CLI::ValidationError("--pad", "expected WxH");
  auto v = int_list(s.substr(0, x) + "," + s.substr(x + 1), 2, "--pad");
  return {v[0], v[1]};
}

struct Ctx {
  ImageRegistry reg;
  std::ostream& out;
  std::string current_file;

  GridMap load(const std::string& path) {
    current_file = path;
    GridMap f = parse_dmap(read_file(path), reg);
    current_file.clear();
    return f;
  }
  void emit(const std::string& text, const std::string& path) {
    if (path.empty()) out << text;
    else write_file(path, text);
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digital second homotopy group toolkit: based maps into digital images, degree, "
               "normalization and spider-move certificates.",
               "dpi2"};
  app.require_subcommand(1);
  std::vector<std::string> images;
  app.add_option("--image", images, "Register a codomain from a .dimg file")->check(CLI::ExistingFile);

  std::string in1, in2, out_path, cert_path;
  int k = 5, int1 = 0, int2 = 0;
  std::string s1, s2;
  std::uint64_t seed = 0;
  bool flag = false;

  auto* check = app.add_subcommand("check", "Parse and validate a .dmap file");
  check->add_option("map", in1)->required();

  auto* degree = app.add_subcommand("degree", "Print the triangle count of an S2 map");
  degree->add_option("map", in1)->required();

  auto* norm = app.add_subcommand("normalize", "Compute the pi_2(S2) class with a certificate");
  norm->add_option("map", in1)->required();
  norm->add_option("--k", k, "Subdivision factor (>= 5)")->capture_default_str();
  norm->add_option("--cert", cert_path, "Write the certificate here");

  auto* verify = app.add_subcommand("verify", "Check a .dcert certificate");
  verify->add_option("cert", in1)->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force search for an extension homotopy");
  oracle->add_option("a", in1)->required();
  oracle->add_option("b", in2)->required();
  oracle->add_option("--pad", s1, "Largest common rectangle, WxH (default: 6x6)");
  std::size_t max_states = 1'000'000;
  oracle->add_option("--max-states", max_states, "State budget")->capture_default_str();
  oracle->add_option("--cert", cert_path, "Write the certificate here when equivalent");

  auto* rend = app.add_subcommand("render", "Draw a map as text or SVG");
  rend->add_option("map", in1)->required();
  std::string format = "ascii";
  rend->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
  int cell = 24;
  rend->add_option("--cell-size", cell, "SVG cell size in pixels")->check(CLI::PositiveNumber)->capture_default_str();
  rend->add_flag("--triangulation", flag, "Overlay the positively sloped triangulation");
  rend->add_option("-o,--output", out_path);

  auto* gen = app.add_subcommand("gen", "Random S2 map with planted islands");
  gen->add_option("--seed", seed)->capture_default_str();
  int gw = 12, gh = 12, gmoves = 0, gplant = 0;
  gen->add_option("--width", gw)->capture_default_str();
  gen->add_option("--height", gh)->capture_default_str();
  gen->add_option("--moves", gmoves)->capture_default_str();
  gen->add_option("--plant", gplant)->capture_default_str();
  gen->add_option("-o,--output", out_path);

  auto* op = app.add_subcommand("op", "Map constructions and traces");
  op->require_subcommand(1);
  auto sub = [&](const char* name, const char* help, int files) {
    auto* c = op->add_subcommand(name, help);
    c->add_option("map", in1)->required();
    if (files > 1) c->add_option("map2", in2)->required();
    c->add_option("-o,--output", out_path);
    return c;
  };
  auto* o_ext = sub("extend", "Trivial extension to I_{w,h}", 1);
  o_ext->add_option("--width", int1)->required();
  o_ext->add_option("--height", int2)->required();
  auto* o_alpha = sub("alpha", "Duplicate column i", 1);
  o_alpha->add_option("--i", int1)->required();
  auto* o_beta = sub("beta", "Duplicate row j", 1);
  o_beta->add_option("--j", int1)->required();
  auto* o_sub = sub("subdivide", "k-fold subdivision", 1);
  o_sub->add_option("--k", int1)->required();
  auto* o_prod = sub("product", "f . g", 2);
  auto* o_inv = sub("inverse", "Horizontal mirror", 1);
  auto* o_paste = sub("paste", "Paste map2 into map with lower left corner --at a,b", 2);
  o_paste->add_option("--at", s1)->required();
  auto* o_wrap = sub("border-wrap", "Surround by a ring of a new basepoint", 1);
  o_wrap->add_option("--value", s1)->required();
  auto* o_comp = sub("compose", "Post-compose with a value table", 1);
  o_comp->add_option("--table", s1, "src:dst pairs, unlisted points map to themselves")->required();
  o_comp->add_option("--target", s2, "Target image name (default: same codomain)");
  auto* o_flood = sub("flood", "Flood with a value", 1);
  o_flood->add_option("--value", s1)->required();
  o_flood->add_option("--cert", cert_path);
  auto* o_dbl = sub("doubling-trace", "Certificate f o alpha_from ~ f o alpha_to", 1);
  o_dbl->add_option("--from", int1)->required();
  o_dbl->add_option("--to", int2)->required();
  o_dbl->add_flag("--rows", flag, "Use row doublings");
  auto* o_tr = sub("translate", "Certificate sliding a block", 1);
  o_tr->add_option("--block", s1, "a_lo,a_hi,b_lo,b_hi")->required();
  o_tr->add_option("--by", s2, "da,db")->required();
  auto* o_cancel = sub("cancel", "Certificate f . f^-1 ~ constant", 1);
  auto* o_split = sub("split", "Project a map into X x Y onto one factor", 1);
  o_split->add_option("--part", int1, "1 or 2")->check(CLI::Range(1, 2))->required();
  auto* o_comb = sub("combine", "(f, c) . (c, g) into the product image", 2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Ctx ctx{{}, out, {}};
  try {
    for (const auto& p : images) ctx.reg.add(parse_dimg(read_file(p)));

    if (*check) {
      GridMap f = ctx.load(in1);
      out << "ok w=" << f.m() << " h=" << f.n() << " codomain=" << f.codomain().name() << '\n';
    } else if (*degree) {
      out << triangle_count(ctx.load(in1)) << '\n';
    } else if (*norm) {
      GridMap f = ctx.load(in1);
      if (k < 5) {
        err << "error: --k must be at least 5\n";
        return 2;
      }
      NormalForm nf = normalize(f, k);
      if (!cert_path.empty()) write_file(cert_path, write_dcert(nf.cert));
      out << nf.cls() << '\n';
    } else if (*verify) {
      ctx.current_file = in1;
      CertDocument doc = parse_dcert(read_file(in1), ctx.reg);
      ctx.current_file.clear();
      Verdict v = verify_certificate(doc.cert);
      if (v.ok) {
        out << "ok " << doc.cert.moves.size() << " moves\n";
        return 0;
      }
      int line = doc.end_line;
      if (v.failed_move >= 0) line = doc.move_lines[std::size_t(v.failed_move)];
      else if (v.reason.rfind("start", 0) == 0) line = doc.start_line;
      out << "FAIL line " << line << ": " << v.reason << '\n';
      return 1;
    } else if (*oracle) {
      GridMap a = ctx.load(in1), b = ctx.load(in2);
      SearchBudget budget;
      budget.max_states = max_states;
      budget.pad_limit = s1.empty() ? Rect{std::max({6, a.m(), b.m()}), std::max({6, a.n(), b.n()})} : pad_size(s1);
      OracleResult r = homotopy_decide(a, b, budget);
      if (r.outcome == Outcome::Equivalent) {
        if (!cert_path.empty()) write_file(cert_path, write_dcert(*r.cert));
        out << "equivalent\n";
      } else {
        out << "unknown\n";
      }
    } else if (*rend) {
      RenderSpec spec;
      spec.format = format == "svg" ? RenderSpec::Format::Svg : RenderSpec::Format::Ascii;
      spec.cell_size = cell;
      spec.show_triangulation = flag;
      const char* env = std::getenv("DPI2_COLOR");
      spec.color = env && std::string(env) == "1";
      ctx.emit(render(ctx.load(in1), spec), out_path);
    } else if (*gen) {
      ctx.emit(write_dmap(gen_random(seed, gw, gh, gmoves, gplant)), out_path);
    } else if (*op) {
      GridMap f = ctx.load(in1);
      auto token = [&](const std::string& t) { return parse_value_token(f.codomain(), t, f.basepoint()); };
      if (*o_ext) ctx.emit(write_dmap(trivial_extend(f, int1, int2)), out_path);
      else if (*o_alpha) ctx.emit(write_dmap(apply_alpha(f, int1)), out_path);
      else if (*o_beta) ctx.emit(write_dmap(apply_beta(f, int1)), out_path);
      else if (*o_sub) ctx.emit(write_dmap(subdivide(f, int1)), out_path);
      else if (*o_prod) ctx.emit(write_dmap(product(f, ctx.load(in2))), out_path);
      else if (*o_inv) ctx.emit(write_dmap(inverse(f)), out_path);
      else if (*o_paste) {
        GridMap g = ctx.load(in2);
        auto at = int_list(s1, 2, "--at");
        ctx.emit(write_dmap(paste(f, {at[0], at[0] + g.m(), at[1], at[1] + g.n()}, g)), out_path);
      } else if (*o_wrap) {
        ctx.emit(write_dmap(border_wrap(f, token(s1))), out_path);
      } else if (*o_comp) {
        ImagePtr target = s2.empty() ? f.codomain_ptr() : ctx.reg.find(s2);
        if (!target) throw std::domain_error("unknown target image '" + s2 + "'");
        std::vector<int> phi(f.codomain().size());
        for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = int(i);
        std::stringstream ss(s1);
        std::string pair;
        while (std::getline(ss, pair, ',')) {
          const auto c = pair.find(':');
          if (c == std::string::npos) throw CLI::ValidationError("--table", "expected src:dst pairs");
          phi[std::size_t(token(pair.substr(0, c)))] = parse_value_token(*target, pair.substr(c + 1), -1);
        }
        ctx.emit(write_dmap(map_compose(phi, target, f)), out_path);
      } else if (*o_flood) {
        auto [g, moves] = flood(f, token(s1));
        if (!cert_path.empty()) write_file(cert_path, write_dcert({f, moves, g}));
        ctx.emit(write_dmap(g), out_path);
      } else if (*o_dbl) {
        ctx.emit(write_dcert(doubling_trace(f, int1, int2, flag ? Axis::Row : Axis::Col)), out_path);
      } else if (*o_tr) {
        auto r = int_list(s1, 4, "--block");
        auto d = int_list(s2, 2, "--by");
        ctx.emit(write_dcert(translate_trace(f, {r[0], r[1], r[2], r[3]}, d[0], d[1])), out_path);
      } else if (*o_cancel) {
        ctx.emit(write_dcert(cancel_certificate(f)), out_path);
      } else if (*o_split) {
        auto parts = product_split(f);
        ctx.emit(write_dmap(int1 == 1 ? parts.first : parts.second), out_path);
      } else if (*o_comb) {
        GridMap g = ctx.load(in2);
        GridMap h = product_combine(f, g);
        ctx.emit(write_dmap(h), out_path);
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const parse_error& e) {
    err << (ctx.current_file.empty() ? "" : ctx.current_file + ":") << e.what() << '\n';
    return 1;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace dpi2
