#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "fbcs/io.hpp"

namespace fbcs {

/// Min-max maps the field onto [0, 255] and quantizes: the maximum renders white, the minimum
/// black, and a constant field mid-gray (128).
GrayImage scalar_to_gray(const ScalarField2D& s);

/// Writes scalar_to_gray(s) as .png/.ppm, or the raw field when the extension is .sf2d.
void render_scalar(const ScalarField2D& s, const std::filesystem::path& path);

/// One sampled cell of a quiver plot, in cell-width units with y pointing down (SVG frame).
struct QuiverGlyph {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
  bool dot = false;  // zero vector
};

/// Samples every stride-th cell in both axes. Arrows start at the cell center; the longest
/// sampled arrow is 0.9 * stride cells long. Throws DomainError for stride 0.
std::vector<QuiverGlyph> quiver_glyphs(const VectorField2D& f, std::size_t stride);

/// SVG 1.1 document drawing quiver_glyphs(f, stride).
std::string quiver_svg(const VectorField2D& f, std::size_t stride);

void render_quiver(const VectorField2D& f, const std::filesystem::path& path, std::size_t stride);

}  // namespace fbcs
