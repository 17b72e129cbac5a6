#include "dpi2/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "dpi2/sphere.hpp"

namespace dpi2 {

parse_error::parse_error(int line, int col, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + " col " + std::to_string(col) + ": " + what),
      line_(line),
      col_(col) {}

ImagePtr ImageRegistry::find(const std::string& name) const {
  if (auto it = images_.find(name); it != images_.end()) return it->second;
  if (name == "S2") return sphere2();
  if (name.size() > 1 && name[0] == 'S') {
    int n = 0;
    auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && p == name.data() + name.size() && n >= 1 && n <= 64) return make_sphere(n);
  }
  // Product images are named "<X>x<Y>".
  for (auto x = name.find('x'); x != std::string::npos; x = name.find('x', x + 1)) {
    auto l = find(name.substr(0, x)), r = find(name.substr(x + 1));
    if (l && r) return make_product(l, r);
  }
  return nullptr;
}

namespace {

struct Tok {
  std::string_view s;
  int col;  // 1-based
};

struct Line {
  std::string_view text;
  int no;
  std::vector<Tok> toks;
};

std::vector<Tok> tokenize(std::string_view line) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back({line.substr(i, j - i), int(i) + 1});
    i = j;
  }
  return out;
}

// Non-blank lines that are not '#' comments.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t e = text.find('\n', pos);
    if (e == std::string_view::npos) e = text.size();
    std::string_view l = text.substr(pos, e - pos);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    ++no;
    auto toks = tokenize(l);
    if (!toks.empty() && toks[0].s[0] != '#') out.push_back({l, no, std::move(toks)});
    if (e == text.size()) break;
    pos = e + 1;
  }
  return out;
}

long long to_int(const Tok& t, int line) {
  long long v = 0;
  auto s = t.s;
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw parse_error(line, t.col, "expected an integer, got '" + std::string(t.s) + "'");
  return v;
}

std::map<std::string, Tok> key_values(const Line& l, std::size_t from) {
  std::map<std::string, Tok> kv;
  for (std::size_t i = from; i < l.toks.size(); ++i) {
    auto s = l.toks[i].s;
    auto eq = s.find('=');
    if (eq == std::string_view::npos) throw parse_error(l.no, l.toks[i].col, "expected key=value");
    kv[std::string(s.substr(0, eq))] = {s.substr(eq + 1), l.toks[i].col + int(eq) + 1};
  }
  return kv;
}

const Tok& need(const std::map<std::string, Tok>& kv, const std::string& key, const Line& l) {
  auto it = kv.find(key);
  if (it == kv.end()) throw parse_error(l.no, 1, "missing " + key + "=");
  return it->second;
}

void expect_magic(const Line& l, std::string_view magic) {
  if (l.toks.size() < 2 || l.toks[0].s != magic || l.toks[1].s != "v1")
    throw parse_error(l.no, 1, "expected header '" + std::string(magic) + " v1'");
}

struct GridCells {
  GridMap map;
  std::vector<std::vector<Tok>> toks;  // by b
  std::vector<int> lines;              // by b
};

GridCells read_grid(const std::vector<Line>& ls, std::size_t& i, const ImagePtr& img, int base, int m, int n,
                    int after_line) {
  GridCells g{GridMap(img, base, {m, n}), std::vector<std::vector<Tok>>(std::size_t(n + 1)),
              std::vector<int>(std::size_t(n + 1))};
  for (int b = n; b >= 0; --b) {
    if (i >= ls.size()) throw parse_error(after_line + 1, 1, "grid ends early: expected " + std::to_string(n + 1) + " rows");
    const Line& l = ls[i++];
    if (int(l.toks.size()) != m + 1)
      throw parse_error(l.no, 1, "expected " + std::to_string(m + 1) + " values, got " + std::to_string(l.toks.size()));
    for (int a = 0; a <= m; ++a) {
      const Tok& t = l.toks[std::size_t(a)];
      int v = -1;
      try {
        v = parse_value_token(*img, t.s, base);
      } catch (const std::domain_error& e) {
        throw parse_error(l.no, t.col, e.what());
      }
      g.map.set(a, b, v);
    }
    g.toks[std::size_t(b)] = l.toks;
    g.lines[std::size_t(b)] = l.no;
    after_line = l.no;
  }
  return g;
}

void check_grid(const GridCells& g) {
  const GridMap& f = g.map;
  const auto& img = f.codomain();
  auto where = [&](int a, int b) { return std::pair{g.lines[std::size_t(b)], g.toks[std::size_t(b)][std::size_t(a)].col}; };
  for (int b = f.n(); b >= 0; --b)
    for (int a = 0; a <= f.m(); ++a)
      if (f.rect().on_boundary(a, b) && f.at(a, b) != f.basepoint()) {
        auto [l, c] = where(a, b);
        throw parse_error(l, c, "boundary value at (" + std::to_string(a) + "," + std::to_string(b) + ") is not the basepoint");
      }
  static constexpr int da[4] = {1, -1, 0, 1}, db[4] = {0, -1, -1, -1};
  for (int b = f.n(); b >= 0; --b)
    for (int a = 0; a <= f.m(); ++a)
      for (int k = 0; k < 4; ++k) {
        const int a2 = a + da[k], b2 = b + db[k];
        if (!f.rect().contains(a2, b2)) continue;
        if (!img.adj(std::size_t(f.at(a, b)), std::size_t(f.at(a2, b2)))) {
          // Point at the interior cell when one side is pinned boundary.
          auto [l, c] = f.rect().on_boundary(a, b) ? where(a2, b2) : where(a, b);
          throw parse_error(l, c, "discontinuous: (" + std::to_string(a) + "," + std::to_string(b) + ")=" +
                                      value_token(img, f.at(a, b)) + " and (" + std::to_string(a2) + "," +
                                      std::to_string(b2) + ")=" + value_token(img, f.at(a2, b2)) +
                                      " are not adjacent");
        }
      }
}

std::string grid_text(const GridMap& f) {
  std::string out;
  const bool s2 = is_s2(f.codomain());
  for (int b = f.n(); b >= 0; --b) {
    for (int a = 0; a <= f.m(); ++a) {
      if (a) out += ' ';
      const int v = f.at(a, b);
      out += (s2 ? v == int(S2::MinusE1) : v == f.basepoint()) ? "." : value_token(f.codomain(), v);
    }
    out += '\n';
  }
  return out;
}

struct MapHeader {
  ImagePtr img;
  int base;
  int m, n;
};

MapHeader read_map_header(const Line& l, std::size_t from, const ImageRegistry& reg, bool base_optional) {
  auto kv = key_values(l, from);
  MapHeader h;
  const Tok& cod = need(kv, "codomain", l);
  h.img = reg.find(std::string(cod.s));
  if (!h.img) throw parse_error(l.no, cod.col, "unknown codomain '" + std::string(cod.s) + "'");
  const Tok& w = need(kv, "w", l);
  const Tok& hh = need(kv, "h", l);
  h.m = int(to_int(w, l.no));
  h.n = int(to_int(hh, l.no));
  if (h.m < 0 || h.n < 0) throw parse_error(l.no, w.col, "w and h must be >= 0");
  if (auto it = kv.find("basepoint"); it != kv.end()) {
    try {
      h.base = parse_value_token(*h.img, it->second.s, -1);
    } catch (const std::domain_error& e) {
      throw parse_error(l.no, it->second.col, e.what());
    }
  } else if (base_optional && is_s2(*h.img)) {
    h.base = int(S2::MinusE1);
  } else {
    throw parse_error(l.no, 1, "missing basepoint=");
  }
  return h;
}

}  // namespace

std::string value_token(const DigitalImage& img, int v) {
  if (is_s2(img)) return s2_token(S2(v));
  return std::to_string(v);
}

int parse_value_token(const DigitalImage& img, std::string_view tok, int basepoint) {
  if (is_s2(img)) {
    auto l = parse_s2_token(tok);
    if (!l) throw std::domain_error("bad S2 label '" + std::string(tok) + "'");
    return int(*l);
  }
  if (tok == ".") {
    if (basepoint < 0) throw std::domain_error("'.' needs a basepoint");
    return basepoint;
  }
  int v = -1;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size() || v < 0 || std::size_t(v) >= img.size())
    throw std::domain_error("value '" + std::string(tok) + "' is not a point of " + img.name());
  return v;
}

ImagePtr parse_dimg(std::string_view text) {
  auto ls = split_lines(text);
  if (ls.empty()) throw parse_error(1, 1, "empty document");
  const Line& h = ls[0];
  expect_magic(h, "dimg");
  if (h.toks.size() < 3) throw parse_error(h.no, 1, "missing image name");
  const std::string name(h.toks[2].s);
  auto kv = key_values(h, 3);
  const Tok& dt = need(kv, "dim", h);
  const long long dim = to_int(dt, h.no);
  if (dim < 1) throw parse_error(h.no, dt.col, "dim must be >= 1");
  const Tok& at = need(kv, "adj", h);
  const bool expl = at.s == "explicit";
  int q = 0;
  if (!expl) {
    if (at.s.size() < 2 || at.s[0] != 'c') throw parse_error(h.no, at.col, "adj must be c<q> or explicit");
    q = int(to_int({at.s.substr(1), at.col + 1}, h.no));
  }
  std::vector<Point> pts;
  std::size_t i = 1;
  for (; i < ls.size() && ls[i].toks[0].s != "edges"; ++i) {
    if (ls[i].toks.size() != std::size_t(dim))
      throw parse_error(ls[i].no, 1, "expected " + std::to_string(dim) + " coordinates");
    Point p;
    for (const auto& t : ls[i].toks) p.push_back(to_int(t, ls[i].no));
    pts.push_back(std::move(p));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (i < ls.size()) {
    if (!expl) throw parse_error(ls[i].no, 1, "edges given for a lattice adjacency");
    for (++i; i < ls.size(); ++i) {
      if (ls[i].toks.size() != 2) throw parse_error(ls[i].no, 1, "expected an index pair");
      auto x = to_int(ls[i].toks[0], ls[i].no), y = to_int(ls[i].toks[1], ls[i].no);
      if (x < 0 || y < 0 || std::size_t(x) >= pts.size() || std::size_t(y) >= pts.size())
        throw parse_error(ls[i].no, 1, "edge endpoint out of range");
      edges.emplace_back(std::size_t(x), std::size_t(y));
    }
  }
  try {
    return std::make_shared<DigitalImage>(name, std::move(pts),
                                          expl ? AdjacencyKind::explicit_edges(std::move(edges)) : AdjacencyKind::lattice(q));
  } catch (const std::domain_error& e) {
    throw parse_error(h.no, 1, e.what());
  }
}

std::string write_dimg(const DigitalImage& img) {
  const bool expl = img.adjacency().kind == AdjacencyKind::Kind::Explicit;
  std::ostringstream os;
  os << "dimg v1 " << img.name() << " dim=" << img.dim() << " adj="
     << (expl ? std::string("explicit") : "c" + std::to_string(img.adjacency().q)) << '\n';
  for (const auto& p : img.points()) {
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? " " : "") << p[k];
    os << '\n';
  }
  if (expl) {
    os << "edges\n";
    for (auto [i, j] : img.edge_list()) os << i << ' ' << j << '\n';
  }
  return os.str();
}

GridMap parse_dmap(std::string_view text, const ImageRegistry& reg) {
  auto ls = split_lines(text);
  if (ls.empty()) throw parse_error(1, 1, "empty document");
  expect_magic(ls[0], "dmap");
  auto h = read_map_header(ls[0], 2, reg, false);
  std::size_t i = 1;
  auto g = read_grid(ls, i, h.img, h.base, h.m, h.n, ls[0].no);
  if (i < ls.size()) throw parse_error(ls[i].no, 1, "unexpected content after the grid");
  check_grid(g);
  return g.map;
}

std::string write_dmap(const GridMap& f) {
  return "dmap v1 w=" + std::to_string(f.m()) + " h=" + std::to_string(f.n()) + " codomain=" + f.codomain().name() +
         " basepoint=" + value_token(f.codomain(), f.basepoint()) + "\n" + grid_text(f);
}

CertDocument parse_dcert(std::string_view text, const ImageRegistry& reg) {
  auto ls = split_lines(text);
  if (ls.empty()) throw parse_error(1, 1, "empty document");
  expect_magic(ls[0], "dcert");
  auto h = read_map_header(ls[0], 2, reg, true);
  std::size_t i = 1;
  auto section = [&](std::string_view name) -> const Line& {
    if (i >= ls.size() || ls[i].toks[0].s != name)
      throw parse_error(i < ls.size() ? ls[i].no : ls.back().no + 1, 1, "expected section '" + std::string(name) + "'");
    return ls[i++];
  };
  CertDocument doc{{GridMap(h.img, h.base, {h.m, h.n}), {}, GridMap(h.img, h.base, {h.m, h.n})}, 0, 0, {}};
  doc.start_line = section("start").no;
  doc.cert.start = read_grid(ls, i, h.img, h.base, h.m, h.n, doc.start_line).map;
  const Line& ml = section("moves");
  long long expected = -1;
  if (ml.toks.size() > 1) expected = to_int(ml.toks[1], ml.no);
  for (; i < ls.size() && ls[i].toks[0].s == "S"; ++i) {
    const Line& l = ls[i];
    if (l.toks.size() != 4) throw parse_error(l.no, 1, "expected 'S <a> <b> <value>'");
    SpiderMove mv{int(to_int(l.toks[1], l.no)), int(to_int(l.toks[2], l.no)), 0};
    try {
      mv.value = parse_value_token(*h.img, l.toks[3].s, h.base);
    } catch (const std::domain_error& e) {
      throw parse_error(l.no, l.toks[3].col, e.what());
    }
    doc.cert.moves.push_back(mv);
    doc.move_lines.push_back(l.no);
  }
  if (expected >= 0 && expected != (long long)doc.cert.moves.size())
    throw parse_error(ml.no, ml.toks[1].col, "move count says " + std::to_string(expected) + ", found " +
                                                 std::to_string(doc.cert.moves.size()));
  doc.end_line = section("end").no;
  doc.cert.end = read_grid(ls, i, h.img, h.base, h.m, h.n, doc.end_line).map;
  if (i < ls.size()) throw parse_error(ls[i].no, 1, "unexpected content after the end grid");
  return doc;
}

std::string write_dcert(const Certificate& c) {
  const GridMap& s = c.start;
  std::string out = "dcert v1 codomain=" + s.codomain().name() + " w=" + std::to_string(s.m()) +
                    " h=" + std::to_string(s.n()) + " basepoint=" + value_token(s.codomain(), s.basepoint()) + "\n";
  out += "start\n" + grid_text(s);
  out += "moves " + std::to_string(c.moves.size()) + "\n";
  for (const auto& mv : c.moves)
    out += "S " + std::to_string(mv.a) + " " + std::to_string(mv.b) + " " + value_token(s.codomain(), mv.value) + "\n";
  out += "end\n" + grid_text(c.end);
  return out;
}

GridMap s2_from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::domain_error("no rows");
  std::string doc;
  const int n = int(rows.size()) - 1;
  const int m = int(tokenize(rows[0]).size()) - 1;
  doc = "dmap v1 w=" + std::to_string(m) + " h=" + std::to_string(n) + " codomain=S2 basepoint=-1\n";
  for (const auto& r : rows) doc += r + "\n";
  return parse_dmap(doc);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace dpi2
