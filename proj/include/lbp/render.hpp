#pragma once

#include <string>

#include "lbp/engine.hpp"

namespace lbp {

/// One character per interior cell, rows printed top to bottom:
/// '#' +4, '+' +2, '.' 0, '-' -2, '=' -4, '?' anything else.
std::string render_field_ascii(const FieldMap& field, int n);

char field_glyph(int value);

/// Plain PGM (P2), one pixel per interior cell, top row first.
/// Pixel = round((value + 4) * 255 / 8), so -4 maps to 0 and +4 to 255.
std::string render_field_pgm(const FieldMap& field, int n);

}  // namespace lbp
