#pragma once

#include <cmath>

namespace fbcs {

/// Primary-color intensities of one pixel, each in [0, 1].
struct RgbIntensity {
  double i_r = 0.0;
  double i_g = 0.0;
  double i_b = 0.0;

  bool operator==(const RgbIntensity&) const = default;
};

/// Coordinates of a color vector s = r e_r + g e_g + b e_b in the color space fiber.
/// Components are square roots of intensities, so they are non-negative; they may exceed 1
/// for lifted vectors that have not been scaled yet.
struct ColorVector {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  bool operator==(const ColorVector&) const = default;
};

/// s = spect + m (e_r + e_g + e_b), with min(spect) == 0 exactly and m >= 0.
struct SpectralDecomposition {
  ColorVector spect;
  double achro_coord = 0.0;

  bool operator==(const SpectralDecomposition&) const = default;
};

bool is_valid(const RgbIntensity& i) noexcept;
bool is_valid(const ColorVector& s) noexcept;

/// (sqrt(I_R), sqrt(I_G), sqrt(I_B)).
ColorVector to_color_vector(const RgbIntensity& i) noexcept;

/// Squares the coordinates back to intensities. Throws RangeError naming the channel when a
/// coordinate is outside [0, 1].
RgbIntensity to_intensities(const ColorVector& s);

SpectralDecomposition decompose(const ColorVector& s) noexcept;
ColorVector recombine(const SpectralDecomposition& d) noexcept;

/// |s_w| = sqrt(3) * m, the length of the achromatic part along the gray axis.
inline double achromatic_magnitude(const SpectralDecomposition& d) noexcept {
  return std::sqrt(3.0) * d.achro_coord;
}

/// Inverse sRGB transfer curve applied to one encoded channel value in [0, 1].
double srgb_to_linear(double encoded) noexcept;
RgbIntensity linearize(const RgbIntensity& encoded) noexcept;

}  // namespace fbcs
