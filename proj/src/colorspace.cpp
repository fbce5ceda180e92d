#include "fbcs/colorspace.hpp"

#include <algorithm>
#include <string>

#include "fbcs/error.hpp"

namespace fbcs {
namespace {

bool in_unit(double v) noexcept { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

bool non_negative(double v) noexcept { return std::isfinite(v) && v >= 0.0; }

void check_unit(double v, const char* channel) {
  if (!in_unit(v)) {
    throw RangeError(std::string("color vector channel ") + channel + " = " + std::to_string(v) +
                     " is outside [0, 1]; scale the vector first");
  }
}

}  // namespace

bool is_valid(const RgbIntensity& i) noexcept {
  return in_unit(i.i_r) && in_unit(i.i_g) && in_unit(i.i_b);
}

bool is_valid(const ColorVector& s) noexcept {
  return non_negative(s.r) && non_negative(s.g) && non_negative(s.b);
}

ColorVector to_color_vector(const RgbIntensity& i) noexcept {
  return {std::sqrt(i.i_r), std::sqrt(i.i_g), std::sqrt(i.i_b)};
}

RgbIntensity to_intensities(const ColorVector& s) {
  check_unit(s.r, "r");
  check_unit(s.g, "g");
  check_unit(s.b, "b");
  return {s.r * s.r, s.g * s.g, s.b * s.b};
}

SpectralDecomposition decompose(const ColorVector& s) noexcept {
  const double m = std::min({s.r, s.g, s.b});
  // The minimum channel is written as a literal zero rather than m - m.
  SpectralDecomposition d{{s.r - m, s.g - m, s.b - m}, m};
  if (s.r == m) {
    d.spect.r = 0.0;
  } else if (s.g == m) {
    d.spect.g = 0.0;
  } else {
    d.spect.b = 0.0;
  }
  return d;
}

ColorVector recombine(const SpectralDecomposition& d) noexcept {
  const double m = d.achro_coord;
  return {d.spect.r + m, d.spect.g + m, d.spect.b + m};
}

double srgb_to_linear(double encoded) noexcept {
  if (encoded <= 0.04045) {
    return encoded / 12.92;
  }
  return std::pow((encoded + 0.055) / 1.055, 2.4);
}

RgbIntensity linearize(const RgbIntensity& encoded) noexcept {
  return {srgb_to_linear(encoded.i_r), srgb_to_linear(encoded.i_g), srgb_to_linear(encoded.i_b)};
}

}  // namespace fbcs
