#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpi2/homotopy.hpp"

namespace dpi2 {

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, int col, const std::string& what);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// Codomains by name. Spheres "S<n>" resolve without registration.
class ImageRegistry {
 public:
  void add(ImagePtr img) { images_[img->name()] = std::move(img); }
  ImagePtr find(const std::string& name) const;

 private:
  std::map<std::string, ImagePtr> images_;
};

ImagePtr parse_dimg(std::string_view text);
std::string write_dimg(const DigitalImage& img);

// Grid cells use the S2 tokens for S2 maps and point indices otherwise; "."
// is -1 on S2 and the basepoint elsewhere.
std::string value_token(const DigitalImage& img, int v);
int parse_value_token(const DigitalImage& img, std::string_view tok, int basepoint);

// Checks boundary and continuity, reporting the first offending cell.
GridMap parse_dmap(std::string_view text, const ImageRegistry& reg = {});
std::string write_dmap(const GridMap& f);

struct CertDocument {
  Certificate cert;
  int start_line = 0, end_line = 0;
  std::vector<int> move_lines;  // 1-based source line of each move
};

// Grids are read as-is; continuity is left to verify_certificate.
CertDocument parse_dcert(std::string_view text, const ImageRegistry& reg = {});
std::string write_dcert(const Certificate& c);

// S2 map from rows listed top (b = n) first.
GridMap s2_from_rows(const std::vector<std::string>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dpi2
