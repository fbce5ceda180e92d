#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "fbcs/fieldops.hpp"
#include "fbcs/mapping.hpp"

namespace fbcs::test {

inline std::filesystem::path temp_dir(const std::string& name) {
  const std::filesystem::path dir = std::filesystem::path(FBCS_TEST_TMP) / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline ImageGrid random_image(std::mt19937_64& rng, std::size_t w, std::size_t h) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ImageGrid img(w, h);
  for (RgbIntensity& px : img.cells()) {
    px = {u(rng), u(rng), u(rng)};
  }
  return img;
}

/// Image whose intensities are exact multiples of 1/255.
inline ImageGrid random_8bit_image(std::mt19937_64& rng, std::size_t w, std::size_t h) {
  std::uniform_int_distribution<int> u(0, 255);
  ImageGrid img(w, h);
  for (RgbIntensity& px : img.cells()) {
    px = {u(rng) / 255.0, u(rng) / 255.0, u(rng) / 255.0};
  }
  return img;
}

inline VectorField2D random_field(std::mt19937_64& rng, std::size_t w, std::size_t h,
                                  double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  VectorField2D f(w, h);
  for (PlanarVector& v : f.cells()) {
    v = {u(rng), u(rng)};
  }
  return f;
}

inline ScalarField2D random_scalar(std::mt19937_64& rng, std::size_t w, std::size_t h) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ScalarField2D s(w, h);
  for (double& v : s.cells()) {
    v = u(rng);
  }
  return s;
}

inline ColorVector random_color_vector(std::mt19937_64& rng, double hi = 1.0) {
  std::uniform_real_distribution<double> u(0.0, hi);
  return {u(rng), u(rng), u(rng)};
}

/// Random vector with one coordinate zeroed (a spectral vector).
inline ColorVector random_spectral(std::mt19937_64& rng) {
  ColorVector s = random_color_vector(rng);
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: s.r = 0.0; break;
    case 1: s.g = 0.0; break;
    default: s.b = 0.0; break;
  }
  return s;
}

inline double max_abs_diff(const ColorVector& a, const ColorVector& b) {
  return std::max({std::abs(a.r - b.r), std::abs(a.g - b.g), std::abs(a.b - b.b)});
}

inline double max_abs_diff(const RgbIntensity& a, const RgbIntensity& b) {
  return std::max({std::abs(a.i_r - b.i_r), std::abs(a.i_g - b.i_g), std::abs(a.i_b - b.i_b)});
}

inline double max_abs_diff(const ImageGrid& a, const ImageGrid& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, max_abs_diff(a.data()[i], b.data()[i]));
  }
  return worst;
}

/// Field sampled from f(x, y) in the operators' y-up frame.
template <typename Fn>
VectorField2D sample_field(std::size_t w, std::size_t h, Fn fn) {
  VectorField2D f(w, h);
  for (std::size_t row = 0; row < h; ++row) {
    for (std::size_t col = 0; col < w; ++col) {
      f(col, row) = fn(static_cast<double>(col), y_up(row, h));
    }
  }
  return f;
}

template <typename Fn>
ScalarField2D sample_scalar(std::size_t w, std::size_t h, Fn fn) {
  ScalarField2D s(w, h);
  for (std::size_t row = 0; row < h; ++row) {
    for (std::size_t col = 0; col < w; ++col) {
      s(col, row) = fn(static_cast<double>(col), y_up(row, h));
    }
  }
  return s;
}

}  // namespace fbcs::test
