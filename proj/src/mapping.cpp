#include "fbcs/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "kernels.hpp"

namespace fbcs {
namespace {

bool is_finite(const PlanarVector& v) noexcept { return std::isfinite(v.p) && std::isfinite(v.q); }

void check_finite(const VectorField2D& f) {
  const auto cells = f.cells();
  const auto bad = std::find_if(cells.begin(), cells.end(),
                                [](const PlanarVector& v) { return !is_finite(v); });
  if (bad != cells.end()) {
    const auto index = static_cast<std::size_t>(bad - cells.begin());
    throw DomainError("vector field cell (" + std::to_string(index % f.width()) + ", " +
                      std::to_string(index / f.width()) + ") is not finite");
  }
}

Grid<ColorVector> lift_all(const VectorField2D& f) {
  Grid<ColorVector> lifted(f.width(), f.height());
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  const PlanarVector* src = f.data();
  ColorVector* dst = lifted.data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    dst[i] = kernels::lift(src[i]);
  }
  return lifted;
}

// max is order-insensitive, so the reduction is exact for any thread count.
double max_coordinate(const Grid<ColorVector>& lifted) {
  const auto n = static_cast<std::ptrdiff_t>(lifted.size());
  const ColorVector* src = lifted.data();
  double peak = 0.0;
#pragma omp parallel for schedule(static) reduction(max : peak)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    peak = std::max(peak, kernels::max_channel(src[i]));
  }
  return peak;
}

}  // namespace

ScalePolicy ScalePolicy::fixed(double factor) {
  if (!std::isfinite(factor) || factor <= 0.0) {
    throw DomainError("scale factor must be finite and positive, got " + std::to_string(factor));
  }
  return ScalePolicy(Mode::fixed, factor);
}

std::array<PlanarVector, 3> projected_basis() noexcept {
  return {project({1.0, 0.0, 0.0}), project({0.0, 1.0, 0.0}), project({0.0, 0.0, 1.0})};
}

PlanarVector project(const ColorVector& s) noexcept { return kernels::project(s); }

ColorVector lift(const PlanarVector& v) {
  if (!is_finite(v)) {
    throw DomainError("cannot lift non-finite planar vector (" + std::to_string(v.p) + ", " +
                      std::to_string(v.q) + ")");
  }
  return kernels::lift(v);
}

VectorField2D forward_map(const ImageGrid& img) {
  VectorField2D out(img.width(), img.height());
  const auto n = static_cast<std::ptrdiff_t>(img.size());
  const RgbIntensity* src = img.data();
  PlanarVector* dst = out.data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    dst[i] = kernels::project(to_color_vector(src[i]));
  }
  return out;
}

double scale_factor(const VectorField2D& f, const ScalePolicy& policy) {
  if (policy.mode() == ScalePolicy::Mode::fixed) {
    return policy.factor();
  }
  check_finite(f);
  const double peak = max_coordinate(lift_all(f));
  return peak > 0.0 ? 1.0 / peak : 1.0;
}

ImageGrid backward_map(const VectorField2D& f, const ScalePolicy& policy) {
  check_finite(f);
  const Grid<ColorVector> lifted = lift_all(f);
  ImageGrid out(f.width(), f.height());
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  const ColorVector* src = lifted.data();
  RgbIntensity* dst = out.data();

  if (policy.mode() == ScalePolicy::Mode::fixed) {
    const double factor = policy.factor();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      dst[i] = kernels::square_scaled(src[i], factor);
    }
    return out;
  }

  const double peak = max_coordinate(lifted);
  if (peak <= 0.0) {
    return out;  // identically zero field: black
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const ColorVector s{src[i].r / peak, src[i].g / peak, src[i].b / peak};
    dst[i] = {s.r * s.r, s.g * s.g, s.b * s.b};
  }
  return out;
}

ImageGrid achromatic_free_equivalent(const ImageGrid& img) {
  ImageGrid out(img.width(), img.height());
  const auto n = static_cast<std::ptrdiff_t>(img.size());
  const RgbIntensity* src = img.data();
  RgbIntensity* dst = out.data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    dst[i] = kernels::drop_achromatic(src[i]);
  }
  return out;
}

void validate(const ImageGrid& img) {
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x < img.width(); ++x) {
      if (!is_valid(img(x, y))) {
        throw RangeError("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                         ") has an intensity outside [0, 1]");
      }
    }
  }
}

}  // namespace fbcs
