#include "fbcs/filters.hpp"

#include <cstddef>
#include <string>

#include "kernels.hpp"

namespace fbcs {

ImageGrid achromatic_filter(const ImageGrid& img, double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw DomainError("beta must lie in [0, 1], got " + std::to_string(beta));
  }
  if (beta == 1.0) {
    return img;
  }
  ImageGrid out(img.width(), img.height());
  const auto n = static_cast<std::ptrdiff_t>(img.size());
  const RgbIntensity* src = img.data();
  RgbIntensity* dst = out.data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    dst[i] = kernels::partial_achromatic(src[i], beta);
  }
  return out;
}

ScalarField2D achromatic_map(const ImageGrid& img) {
  ScalarField2D out(img.width(), img.height());
  const auto n = static_cast<std::ptrdiff_t>(img.size());
  const RgbIntensity* src = img.data();
  double* dst = out.data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    dst[i] = kernels::achromatic_value(src[i]);
  }
  return out;
}

ImageGrid achromatic_gradient_image(const ImageGrid& img) {
  return backward_map(gradient(achromatic_map(img)), ScalePolicy::automatic());
}

}  // namespace fbcs
