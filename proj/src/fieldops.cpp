#include "fbcs/fieldops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kernels.hpp"

namespace fbcs {
namespace {

void require_stencil_size(std::size_t width, std::size_t height, const char* op) {
  if (width < 2 || height < 2) {
    throw DimensionError(std::string(op) + " needs a grid of at least 2x2, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

ScalarField2D divergence(const VectorField2D& f) {
  const std::size_t w = f.width();
  const std::size_t h = f.height();
  require_stencil_size(w, h, "divergence");
  ScalarField2D out(w, h);
  const auto p = [&f](std::size_t x, std::size_t y) { return f(x, y).p; };
  const auto q = [&f](std::size_t x, std::size_t y) { return f(x, y).q; };
  const auto rows = static_cast<std::ptrdiff_t>(h);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t yi = 0; yi < rows; ++yi) {
    const auto y = static_cast<std::size_t>(yi);
    for (std::size_t x = 0; x < w; ++x) {
      out(x, y) = kernels::d_dx(p, w, x, y) + kernels::d_dy(q, h, x, y);
    }
  }
  return out;
}

ScalarField2D curl_z(const VectorField2D& f) {
  const std::size_t w = f.width();
  const std::size_t h = f.height();
  require_stencil_size(w, h, "curl");
  ScalarField2D out(w, h);
  const auto p = [&f](std::size_t x, std::size_t y) { return f(x, y).p; };
  const auto q = [&f](std::size_t x, std::size_t y) { return f(x, y).q; };
  const auto rows = static_cast<std::ptrdiff_t>(h);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t yi = 0; yi < rows; ++yi) {
    const auto y = static_cast<std::size_t>(yi);
    for (std::size_t x = 0; x < w; ++x) {
      out(x, y) = kernels::d_dx(q, w, x, y) - kernels::d_dy(p, h, x, y);
    }
  }
  return out;
}

VectorField2D gradient(const ScalarField2D& s) {
  const std::size_t w = s.width();
  const std::size_t h = s.height();
  require_stencil_size(w, h, "gradient");
  VectorField2D out(w, h);
  const auto v = [&s](std::size_t x, std::size_t y) { return s(x, y); };
  const auto rows = static_cast<std::ptrdiff_t>(h);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t yi = 0; yi < rows; ++yi) {
    const auto y = static_cast<std::size_t>(yi);
    for (std::size_t x = 0; x < w; ++x) {
      out(x, y) = {kernels::d_dx(v, w, x, y), kernels::d_dy(v, h, x, y)};
    }
  }
  return out;
}

ScalarField2D minmax_normalize(const ScalarField2D& s, double lo, double hi) {
  if (!(lo < hi)) {
    throw DomainError("normalization range needs lo < hi, got [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  const auto [min_it, max_it] = std::minmax_element(s.cells().begin(), s.cells().end());
  const double vmin = *min_it;
  const double span = *max_it - vmin;
  ScalarField2D out(s.width(), s.height(), 0.5 * (lo + hi));
  if (span == 0.0) {
    return out;
  }
  const double gain = (hi - lo) / span;
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  const double* src = s.data();
  double* dst = out.data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    dst[i] = std::min(hi, lo + (src[i] - vmin) * gain);
  }
  return out;
}

VectorField2D compose(const ScalarField2D& a, const ScalarField2D& b) {
  if (!a.same_shape(b)) {
    throw DimensionError("compose needs equal shapes, got " + std::to_string(a.width()) + "x" +
                         std::to_string(a.height()) + " and " + std::to_string(b.width()) + "x" +
                         std::to_string(b.height()));
  }
  const ScalarField2D na = minmax_normalize(a, -1.0, 1.0);
  const ScalarField2D nb = minmax_normalize(b, -1.0, 1.0);
  VectorField2D out(a.width(), a.height());
  const auto n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out.data()[i] = {na.data()[i], nb.data()[i]};
  }
  return out;
}

}  // namespace fbcs
