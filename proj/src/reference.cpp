#include "fbcs/reference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kernels.hpp"

namespace fbcs::reference {
namespace {

void require_stencil_size(std::size_t width, std::size_t height) {
  if (width < 2 || height < 2) {
    throw DimensionError("stencil needs a grid of at least 2x2, got " + std::to_string(width) +
                         "x" + std::to_string(height));
  }
}

template <typename In, typename Out, typename Fn>
Grid<Out> map_cells(const Grid<In>& in, Fn fn) {
  Grid<Out> out(in.width(), in.height());
  for (std::size_t i = 0; i < in.size(); ++i) {
    out.data()[i] = fn(in.data()[i]);
  }
  return out;
}

}  // namespace

VectorField2D forward_map(const ImageGrid& img) {
  return map_cells<RgbIntensity, PlanarVector>(
      img, [](const RgbIntensity& px) { return kernels::project(to_color_vector(px)); });
}

ImageGrid backward_map(const VectorField2D& f, const ScalePolicy& policy) {
  for (const PlanarVector& v : f.cells()) {
    if (!std::isfinite(v.p) || !std::isfinite(v.q)) {
      throw DomainError("vector field has a non-finite cell");
    }
  }
  const Grid<ColorVector> lifted = map_cells<PlanarVector, ColorVector>(f, kernels::lift);
  if (policy.mode() == ScalePolicy::Mode::fixed) {
    const double factor = policy.factor();
    return map_cells<ColorVector, RgbIntensity>(
        lifted, [factor](const ColorVector& s) { return kernels::square_scaled(s, factor); });
  }
  double peak = 0.0;
  for (const ColorVector& s : lifted.cells()) {
    peak = std::max(peak, kernels::max_channel(s));
  }
  if (peak <= 0.0) {
    return ImageGrid(f.width(), f.height());
  }
  return map_cells<ColorVector, RgbIntensity>(lifted, [peak](const ColorVector& s) {
    const ColorVector t{s.r / peak, s.g / peak, s.b / peak};
    return RgbIntensity{t.r * t.r, t.g * t.g, t.b * t.b};
  });
}

ImageGrid achromatic_free_equivalent(const ImageGrid& img) {
  return map_cells<RgbIntensity, RgbIntensity>(img, kernels::drop_achromatic);
}

ScalarField2D divergence(const VectorField2D& f) {
  require_stencil_size(f.width(), f.height());
  const auto p = [&f](std::size_t x, std::size_t y) { return f(x, y).p; };
  const auto q = [&f](std::size_t x, std::size_t y) { return f(x, y).q; };
  ScalarField2D out(f.width(), f.height());
  for (std::size_t y = 0; y < f.height(); ++y) {
    for (std::size_t x = 0; x < f.width(); ++x) {
      out(x, y) = kernels::d_dx(p, f.width(), x, y) + kernels::d_dy(q, f.height(), x, y);
    }
  }
  return out;
}

ScalarField2D curl_z(const VectorField2D& f) {
  require_stencil_size(f.width(), f.height());
  const auto p = [&f](std::size_t x, std::size_t y) { return f(x, y).p; };
  const auto q = [&f](std::size_t x, std::size_t y) { return f(x, y).q; };
  ScalarField2D out(f.width(), f.height());
  for (std::size_t y = 0; y < f.height(); ++y) {
    for (std::size_t x = 0; x < f.width(); ++x) {
      out(x, y) = kernels::d_dx(q, f.width(), x, y) - kernels::d_dy(p, f.height(), x, y);
    }
  }
  return out;
}

VectorField2D gradient(const ScalarField2D& s) {
  require_stencil_size(s.width(), s.height());
  const auto v = [&s](std::size_t x, std::size_t y) { return s(x, y); };
  VectorField2D out(s.width(), s.height());
  for (std::size_t y = 0; y < s.height(); ++y) {
    for (std::size_t x = 0; x < s.width(); ++x) {
      out(x, y) = {kernels::d_dx(v, s.width(), x, y), kernels::d_dy(v, s.height(), x, y)};
    }
  }
  return out;
}

ImageGrid achromatic_filter(const ImageGrid& img, double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw DomainError("beta must lie in [0, 1]");
  }
  if (beta == 1.0) {
    return img;
  }
  return map_cells<RgbIntensity, RgbIntensity>(
      img, [beta](const RgbIntensity& px) { return kernels::partial_achromatic(px, beta); });
}

ScalarField2D achromatic_map(const ImageGrid& img) {
  return map_cells<RgbIntensity, double>(img, kernels::achromatic_value);
}

VectorField2D generate_mfl(const std::vector<PitSpec>& pits, std::size_t width,
                           std::size_t height, const PlanarVector& background) {
  for (const PitSpec& pit : pits) {
    if (!(pit.depth > 0.0 && pit.radius > 0.0)) {
      throw DomainError("pit depth and radius must be positive");
    }
  }
  VectorField2D out(width, height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      PlanarVector sum{};
      for (const PitSpec& pit : pits) {
        const PlanarVector c =
            kernels::pit_field(pit, static_cast<double>(x), static_cast<double>(y));
        sum.p += c.p;
        sum.q += c.q;
      }
      out(x, y) = {sum.p + background.p, sum.q + background.q};
    }
  }
  return out;
}

}  // namespace fbcs::reference
