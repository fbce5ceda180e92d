#include <doctest.h>

#include <cmath>
#include <random>

#include "fbcs/filters.hpp"
#include "support.hpp"

using namespace fbcs;

TEST_CASE("achromatic_filter endpoints and worked examples") {
  std::mt19937_64 rng(1);
  const ImageGrid img = test::random_image(rng, 8, 8);
  CHECK(achromatic_filter(img, 1.0) == img);

  ImageGrid px(1, 1, {0.81, 0.25, 0.04});
  CHECK(test::max_abs_diff(achromatic_filter(px, 0.0)(0, 0), {0.49, 0.09, 0.0}) < 1e-12);

  ImageGrid gray(1, 1, {0.25, 0.25, 0.25});
  CHECK(test::max_abs_diff(achromatic_filter(gray, 0.5)(0, 0), {0.0625, 0.0625, 0.0625}) <
        1e-15);

  CHECK_THROWS_AS(achromatic_filter(img, -0.01), DomainError);
  CHECK_THROWS_AS(achromatic_filter(img, 1.01), DomainError);
  CHECK_THROWS_AS(achromatic_filter(img, NAN), DomainError);
}

TEST_CASE("achromatic_filter properties") {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 10; ++n) {
    const ImageGrid img = test::random_image(rng, 12, 7);
    const ImageGrid zero = achromatic_filter(img, 0.0);
    CHECK(test::max_abs_diff(zero, backward_map(forward_map(img), ScalePolicy::fixed(1.0))) <=
          1e-12);
    CHECK(test::max_abs_diff(achromatic_filter(zero, 0.0), zero) <= 1e-12);
    for (const auto grid = achromatic_map(zero); double v : grid.cells()) {
      REQUIRE(std::abs(v) <= 1e-12);
    }

    // The CS coordinate is affine in beta between the endpoints.
    const double t = 0.37;
    const ImageGrid mid = achromatic_filter(img, t);
    for (std::size_t i = 0; i < img.size(); ++i) {
      const ColorVector s0 = to_color_vector(zero.data()[i]);
      const ColorVector s1 = to_color_vector(img.data()[i]);
      const ColorVector st = to_color_vector(mid.data()[i]);
      const ColorVector lerp{s0.r + t * (s1.r - s0.r), s0.g + t * (s1.g - s0.g),
                             s0.b + t * (s1.b - s0.b)};
      REQUIRE(test::max_abs_diff(st, lerp) < 1e-12);
    }
  }
}

TEST_CASE("achromatic_map") {
  const ScalarField2D red = achromatic_map(ImageGrid(3, 3, {1.0, 0.0, 0.0}));
  for (double v : red.cells()) {
    CHECK(v == 0.0);
  }
  const ScalarField2D gray = achromatic_map(ImageGrid(2, 2, {0.25, 0.25, 0.25}));
  for (double v : gray.cells()) {
    CHECK(std::abs(v - 0.8660254037844386) < 1e-15);
  }
  CHECK(std::abs(achromatic_map(ImageGrid(1, 1, {0.81, 0.25, 0.04}))(0, 0) -
                 0.34641016151377546) < 1e-12);
}

TEST_CASE("achromatic_gradient_image") {
  const ImageGrid flat = achromatic_gradient_image(ImageGrid(4, 4, {0.3, 0.6, 0.2}));
  for (const RgbIntensity& px : flat.cells()) {
    CHECK(px == RgbIntensity{0.0, 0.0, 0.0});
  }

  // Gray ramp in x: the achromatic map is linear in x, so the gradient is uniform.
  ImageGrid ramp(6, 5);
  for (std::size_t y = 0; y < 5; ++y) {
    for (std::size_t x = 0; x < 6; ++x) {
      const double c = 0.1 * static_cast<double>(x);
      ramp(x, y) = {c * c, c * c, c * c};
    }
  }
  const ImageGrid out = achromatic_gradient_image(ramp);
  for (const RgbIntensity& px : out.cells()) {
    CHECK(test::max_abs_diff(px, out(0, 0)) < 1e-12);
  }
  // Gradient along +x lifts to pure red.
  CHECK(test::max_abs_diff(out(0, 0), {1.0, 0.0, 0.0}) < 1e-12);

  std::mt19937_64 rng(4);
  const ImageGrid any = achromatic_gradient_image(test::random_image(rng, 9, 9));
  for (const RgbIntensity& px : any.cells()) {
    CHECK(std::min({px.i_r, px.i_g, px.i_b}) == 0.0);
  }

  CHECK_THROWS_AS(achromatic_gradient_image(ImageGrid(1, 4)), DimensionError);
}
