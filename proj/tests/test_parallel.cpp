#include <doctest.h>

#include <omp.h>

#include <bit>
#include <random>

#include "fbcs/filters.hpp"
#include "fbcs/mflgen.hpp"
#include "fbcs/reference.hpp"
#include "support.hpp"

using namespace fbcs;

// The OpenMP kernels must be bit-identical to the serial reference for any team size.

namespace {

bool bits_equal(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool identical(const ImageGrid& a, const ImageGrid& b) {
  if (!a.same_shape(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const RgbIntensity& x = a.data()[i];
    const RgbIntensity& y = b.data()[i];
    if (!bits_equal(x.i_r, y.i_r) || !bits_equal(x.i_g, y.i_g) || !bits_equal(x.i_b, y.i_b)) {
      return false;
    }
  }
  return true;
}

bool identical(const VectorField2D& a, const VectorField2D& b) {
  if (!a.same_shape(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!bits_equal(a.data()[i].p, b.data()[i].p) || !bits_equal(a.data()[i].q, b.data()[i].q)) {
      return false;
    }
  }
  return true;
}

bool identical(const ScalarField2D& a, const ScalarField2D& b) {
  if (!a.same_shape(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!bits_equal(a.data()[i], b.data()[i])) return false;
  }
  return true;
}

class ThreadCount {
 public:
  explicit ThreadCount(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadCount() { omp_set_num_threads(saved_); }

 private:
  int saved_;
};

}  // namespace

TEST_CASE("OpenMP kernels match the serial reference bit for bit") {
  std::mt19937_64 rng(51);
  const ImageGrid img = test::random_image(rng, 37, 23);
  const VectorField2D field = test::random_field(rng, 37, 23, 2.0);
  const ScalarField2D scalar = test::random_scalar(rng, 37, 23);
  const std::vector<PitSpec> pits{{5, 5, 1, 2}, {30, 12, 2, 4}, {18, 20, 0.5, 1}};

  for (int threads : {1, 2, 3, 8}) {
    CAPTURE(threads);
    ThreadCount guard(threads);
    CHECK(identical(forward_map(img), reference::forward_map(img)));
    CHECK(identical(backward_map(field, ScalePolicy::automatic()),
                    reference::backward_map(field, ScalePolicy::automatic())));
    CHECK(identical(backward_map(field, ScalePolicy::fixed(0.7)),
                    reference::backward_map(field, ScalePolicy::fixed(0.7))));
    CHECK(identical(achromatic_free_equivalent(img), reference::achromatic_free_equivalent(img)));
    CHECK(identical(divergence(field), reference::divergence(field)));
    CHECK(identical(curl_z(field), reference::curl_z(field)));
    CHECK(identical(gradient(scalar), reference::gradient(scalar)));
    CHECK(identical(achromatic_filter(img, 0.0), reference::achromatic_filter(img, 0.0)));
    CHECK(identical(achromatic_filter(img, 0.4), reference::achromatic_filter(img, 0.4)));
    CHECK(identical(achromatic_map(img), reference::achromatic_map(img)));
    CHECK(identical(generate_mfl(pits, 37, 23, {0.1, 0}),
                    reference::generate_mfl(pits, 37, 23, {0.1, 0})));
  }
}

TEST_CASE("reference implementations keep the error contracts") {
  CHECK_THROWS_AS(reference::divergence(VectorField2D(1, 3)), DimensionError);
  CHECK_THROWS_AS(reference::achromatic_filter(ImageGrid(2, 2), 2.0), DomainError);
  VectorField2D bad(2, 2);
  bad(0, 0) = {NAN, 0};
  CHECK_THROWS_AS(reference::backward_map(bad, ScalePolicy::automatic()), DomainError);
}
