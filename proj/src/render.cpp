#include "fbcs/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fbcs {
namespace {

constexpr double kCellPixels = 10.0;

std::string fmt(double v) {
  char text[32];
  std::snprintf(text, sizeof text, "%.3f", v);
  return text;
}

}  // namespace

GrayImage scalar_to_gray(const ScalarField2D& s) {
  const ScalarField2D scaled = minmax_normalize(s, 0.0, 255.0);
  GrayImage out(s.width(), s.height());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.data()[i] = static_cast<std::uint8_t>(std::round(scaled.data()[i]));
  }
  return out;
}

void render_scalar(const ScalarField2D& s, const std::filesystem::path& path) {
  if (extension_of(path) == ".sf2d") {
    write_field(s, path);
  } else {
    write_image(scalar_to_gray(s), path);
  }
}

std::vector<QuiverGlyph> quiver_glyphs(const VectorField2D& f, std::size_t stride) {
  if (stride == 0) {
    throw DomainError("quiver stride must be at least 1");
  }
  double longest = 0.0;
  for (std::size_t y = 0; y < f.height(); y += stride) {
    for (std::size_t x = 0; x < f.width(); x += stride) {
      longest = std::max(longest, std::hypot(f(x, y).p, f(x, y).q));
    }
  }
  const double scale = longest > 0.0 ? 0.9 * static_cast<double>(stride) / longest : 0.0;
  std::vector<QuiverGlyph> glyphs;
  for (std::size_t y = 0; y < f.height(); y += stride) {
    for (std::size_t x = 0; x < f.width(); x += stride) {
      const PlanarVector& v = f(x, y);
      QuiverGlyph g;
      g.x0 = static_cast<double>(x) + 0.5;
      g.y0 = static_cast<double>(y) + 0.5;
      g.dot = v.p == 0.0 && v.q == 0.0;
      // q is y-up; SVG y grows downward.
      g.x1 = g.x0 + scale * v.p;
      g.y1 = g.y0 - scale * v.q;
      glyphs.push_back(g);
    }
  }
  return glyphs;
}

std::string quiver_svg(const VectorField2D& f, std::size_t stride) {
  const std::vector<QuiverGlyph> glyphs = quiver_glyphs(f, stride);
  const double width = static_cast<double>(f.width()) * kCellPixels;
  const double height = static_cast<double>(f.height()) * kCellPixels;
  const double head = 0.25 * static_cast<double>(stride) * kCellPixels;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<g stroke=\"black\" stroke-width=\"1\" fill=\"black\">\n";
  for (const QuiverGlyph& g : glyphs) {
    const double x0 = g.x0 * kCellPixels;
    const double y0 = g.y0 * kCellPixels;
    if (g.dot) {
      svg += "<circle class=\"dot\" cx=\"" + fmt(x0) + "\" cy=\"" + fmt(y0) + "\" r=\"1\"/>\n";
      continue;
    }
    const double x1 = g.x1 * kCellPixels;
    const double y1 = g.y1 * kCellPixels;
    const double len = std::hypot(x1 - x0, y1 - y0);
    const double ux = (x1 - x0) / len;
    const double uy = (y1 - y0) / len;
    const double h = std::min(head, 0.4 * len);
    const double hx = x1 - h * ux;
    const double hy = y1 - h * uy;
    svg += "<path class=\"arrow\" d=\"M " + fmt(x0) + " " + fmt(y0) + " L " + fmt(x1) + " " +
           fmt(y1) + " M " + fmt(hx - 0.5 * h * uy) + " " + fmt(hy + 0.5 * h * ux) + " L " +
           fmt(x1) + " " + fmt(y1) + " L " + fmt(hx + 0.5 * h * uy) + " " +
           fmt(hy - 0.5 * h * ux) + "\" fill=\"none\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

void render_quiver(const VectorField2D& f, const std::filesystem::path& path,
                   std::size_t stride) {
  const std::string svg = quiver_svg(f, stride);
  write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(svg.data()), svg.size()));
}

}  // namespace fbcs
