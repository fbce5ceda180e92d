#pragma once

// Per-cell arithmetic shared by the OpenMP kernels and the serial reference implementations.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "fbcs/colorspace.hpp"
#include "fbcs/mapping.hpp"
#include "fbcs/mflgen.hpp"

namespace fbcs::kernels {

inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kSqrt3 = 1.73205080756887729353;
inline const double kSqrt2Over3 = std::sqrt(2.0 / 3.0);
inline const double kSqrt1Over6 = std::sqrt(1.0 / 6.0);
inline const double kSqrt1Over2 = std::sqrt(0.5);

inline PlanarVector project(const ColorVector& s) noexcept {
  return {kSqrt2Over3 * s.r - kSqrt1Over6 * (s.g + s.b), kSqrt1Over2 * (s.g - s.b)};
}

// r - b = (p sqrt3 + q) / sqrt2, g - b = sqrt2 q, min(r, g, b) = 0.
inline ColorVector lift(const PlanarVector& v) noexcept {
  const double dr = (v.p * kSqrt3 + v.q) / kSqrt2;
  const double dg = kSqrt2 * v.q;
  const double db = 0.0;
  if (dr <= dg && dr <= db) {
    return {0.0, dg - dr, db - dr};
  }
  if (dg <= db) {
    return {dr - dg, 0.0, db - dg};
  }
  return {dr, dg, 0.0};
}

inline double max_channel(const ColorVector& s) noexcept { return std::max({s.r, s.g, s.b}); }

inline double clamp_unit(double v) noexcept { return std::min(v, 1.0); }

inline RgbIntensity square_scaled(const ColorVector& s, double scale) noexcept {
  const double r = clamp_unit(s.r * scale);
  const double g = clamp_unit(s.g * scale);
  const double b = clamp_unit(s.b * scale);
  return {r * r, g * g, b * b};
}

inline RgbIntensity drop_achromatic(const RgbIntensity& i) noexcept {
  const SpectralDecomposition d = decompose(to_color_vector(i));
  const ColorVector& s = d.spect;
  return {s.r * s.r, s.g * s.g, s.b * s.b};
}

inline RgbIntensity partial_achromatic(const RgbIntensity& i, double beta) noexcept {
  const SpectralDecomposition d = decompose(to_color_vector(i));
  const double m = beta * d.achro_coord;
  const double r = d.spect.r + m;
  const double g = d.spect.g + m;
  const double b = d.spect.b + m;
  return {r * r, g * g, b * b};
}

inline double achromatic_value(const RgbIntensity& i) noexcept {
  const ColorVector s = to_color_vector(i);
  return kSqrt3 * std::min({s.r, s.g, s.b});
}

// One-sided differences on the first/last column or row, central differences elsewhere.
// Grid spacing is one cell. Rows grow downward while y grows upward.
template <typename Get>
inline double d_dx(const Get& get, std::size_t width, std::size_t x, std::size_t y) {
  if (x == 0) return get(1, y) - get(0, y);
  if (x + 1 == width) return get(x, y) - get(x - 1, y);
  return 0.5 * (get(x + 1, y) - get(x - 1, y));
}

template <typename Get>
inline double d_dy(const Get& get, std::size_t height, std::size_t x, std::size_t y) {
  if (y == 0) return get(x, 0) - get(x, 1);
  if (y + 1 == height) return get(x, y - 1) - get(x, y);
  return 0.5 * (get(x, y - 1) - get(x, y + 1));
}

inline PlanarVector pit_field(const PitSpec& pit, double x, double y) noexcept {
  const double dx = x - pit.x;
  const double dy = pit.y - y;  // rows grow downward, the field frame grows upward
  const double a2 = pit.radius * pit.radius;
  const double rho2 = dx * dx + dy * dy + a2;
  const double rho5 = rho2 * rho2 * std::sqrt(rho2);
  const double gain = pit.depth * a2 / rho5;
  return {gain * (2.0 * rho2 + 2.0 * dx * dx - dy * dy), gain * (3.0 * dx * dy)};
}

}  // namespace fbcs::kernels
