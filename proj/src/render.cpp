#include "lbp/render.hpp"

#include <cmath>

namespace lbp {

char field_glyph(int value) {
  switch (value) {
    case 4: return '#';
    case 2: return '+';
    case 0: return '.';
    case -2: return '-';
    case -4: return '=';
    default: return '?';
  }
}

namespace {

int field_value(const FieldMap& field, Coord c) {
  auto it = field.find(c);
  if (it == field.end()) throw Error("field has no value at " + to_string(c));
  return it->second;
}

}  // namespace

std::string render_field_ascii(const FieldMap& field, int n) {
  std::string out;
  for (int b = n; b >= 1; --b) {
    for (int a = 1; a <= n; ++a) out += field_glyph(field_value(field, {a, b}));
    out += '\n';
  }
  return out;
}

std::string render_field_pgm(const FieldMap& field, int n) {
  std::string out = "P2\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  for (int b = n; b >= 1; --b) {
    for (int a = 1; a <= n; ++a) {
      int v = field_value(field, {a, b});
      int pixel = static_cast<int>(std::lround((v + 4) * 255.0 / 8.0));
      out += std::to_string(pixel);
      out += a == n ? '\n' : ' ';
    }
  }
  return out;
}

}  // namespace lbp
