#include <sstream>

#include "dpi2/cli.hpp"
#include "dpi2/io.hpp"
#include "dpi2/sphere.hpp"

namespace dpi2 {

namespace {

// Fill colours for the six S2 labels, in S2 index order.
constexpr const char* kFill[6] = {"#e4572e", "#4c9f70", "#3f7cac", "#f4f4f4", "#a8d5ba", "#a7c4e2"};
constexpr const char* kAnsi[6] = {"\x1b[1;31m", "\x1b[32m", "\x1b[34m", "", "\x1b[2;32m", "\x1b[2;34m"};

std::string cell_token(const GridMap& f, int v, bool s2) {
  if (s2 ? v == int(S2::MinusE1) : v == f.basepoint()) return ".";
  return value_token(f.codomain(), v);
}

std::string ascii(const GridMap& f, bool color) {
  const bool s2 = is_s2(f.codomain());
  std::size_t width = 1;
  for (int v : f.values()) width = std::max(width, cell_token(f, v, s2).size());
  std::string out;
  for (int b = f.n(); b >= 0; --b) {
    for (int a = 0; a <= f.m(); ++a) {
      if (a) out += ' ';
      const int v = f.at(a, b);
      std::string tok = cell_token(f, v, s2);
      tok.insert(0, width - tok.size(), ' ');
      if (color && s2 && *kAnsi[v]) out += kAnsi[v] + tok + "\x1b[0m";
      else out += tok;
    }
    out += '\n';
  }
  return out;
}

std::string svg(const GridMap& f, int cs, bool tri) {
  const bool s2 = is_s2(f.codomain());
  const int W = (f.m() + 1) * cs, H = (f.n() + 1) * cs;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << ' ' << H << "\">\n";
  auto cx = [&](int a) { return a * cs + cs / 2; };
  auto cy = [&](int b) { return (f.n() - b) * cs + cs / 2; };
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a) {
      const int v = f.at(a, b);
      const char* fill = s2 ? kFill[v] : (v == f.basepoint() ? "#f4f4f4" : "#d9d9d9");
      os << "<rect x=\"" << a * cs << "\" y=\"" << (f.n() - b) * cs << "\" width=\"" << cs << "\" height=\"" << cs
         << "\" fill=\"" << fill << "\" stroke=\"#bbbbbb\"/>\n";
    }
  if (tri) {
    os << "<g stroke=\"#333333\" stroke-width=\"1\">\n";
    for (int b = 0; b <= f.n(); ++b)
      for (int a = 0; a <= f.m(); ++a) {
        if (a < f.m()) os << "<line x1=\"" << cx(a) << "\" y1=\"" << cy(b) << "\" x2=\"" << cx(a + 1) << "\" y2=\"" << cy(b) << "\"/>\n";
        if (b < f.n()) os << "<line x1=\"" << cx(a) << "\" y1=\"" << cy(b) << "\" x2=\"" << cx(a) << "\" y2=\"" << cy(b + 1) << "\"/>\n";
        if (a < f.m() && b < f.n())
          os << "<line x1=\"" << cx(a) << "\" y1=\"" << cy(b) << "\" x2=\"" << cx(a + 1) << "\" y2=\"" << cy(b + 1) << "\"/>\n";
      }
    os << "</g>\n";
  }
  for (int b = 0; b <= f.n(); ++b)
    for (int a = 0; a <= f.m(); ++a)
      os << "<text x=\"" << cx(a) << "\" y=\"" << cy(b) << "\" font-size=\"" << cs / 2
         << "\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"monospace\">"
         << cell_token(f, f.at(a, b), s2) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const GridMap& f, const RenderSpec& spec) {
  if (spec.cell_size <= 0) throw precondition_error("cell size must be positive");
  return spec.format == RenderSpec::Format::Svg ? svg(f, spec.cell_size, spec.show_triangulation) : ascii(f, spec.color);
}

}  // namespace dpi2
