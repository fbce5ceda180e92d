#include <doctest.h>

#include <cmath>
#include <random>

#include "fbcs/mflgen.hpp"
#include "support.hpp"

using namespace fbcs;

TEST_CASE("no pits gives the background") {
  const VectorField2D f = generate_mfl({}, 8, 6, {1.0, 0.0});
  for (const PlanarVector& v : f.cells()) {
    CHECK(v == PlanarVector{1.0, 0.0});
  }
}

TEST_CASE("pit center value is (2 depth / radius, 0)") {
  const PitSpec pit{4.0, 3.0, 1.5, 2.5};
  const VectorField2D f = generate_mfl({pit}, 9, 7);
  CHECK(std::abs(f(4, 3).p - 2.0 * 1.5 / 2.5) < 1e-12);
  CHECK(f(4, 3).q == 0.0);
  // The center is the global maximum of the magnitude.
  const double peak = std::hypot(f(4, 3).p, f(4, 3).q);
  for (const PlanarVector& v : f.cells()) {
    CHECK(std::hypot(v.p, v.q) <= peak + 1e-15);
  }
}

TEST_CASE("off-center values") {
  const PitSpec pit{0.0, 0.0, 1.0, 2.0};
  const PlanarVector on_axis = pit_contribution(pit, 2.0, 0.0);
  CHECK(std::abs(on_axis.p - 0.5303300858899106) < 1e-15);
  CHECK(on_axis.q == 0.0);
  // One row above the pit is y = +1 in the field frame.
  const PlanarVector diagonal = pit_contribution(pit, 1.0, -1.0);
  CHECK(std::abs(diagonal.p - 0.5896919751144688) < 1e-15);
  CHECK(std::abs(diagonal.q - 0.13608276348795434) < 1e-15);
}

TEST_CASE("superposition") {
  const std::vector<PitSpec> a{{5.0, 5.0, 1.0, 2.0}, {12.0, 3.0, 0.5, 1.0}};
  const std::vector<PitSpec> b{{9.5, 11.0, 2.0, 3.0}};
  std::vector<PitSpec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const VectorField2D fa = generate_mfl(a, 16, 14);
  const VectorField2D fb = generate_mfl(b, 16, 14);
  const VectorField2D fab = generate_mfl(both, 16, 14);
  for (std::size_t i = 0; i < fab.size(); ++i) {
    CHECK(std::abs(fab.data()[i].p - fa.data()[i].p - fb.data()[i].p) < 1e-12);
    CHECK(std::abs(fab.data()[i].q - fa.data()[i].q - fb.data()[i].q) < 1e-12);
  }

  const PitSpec twin{6.0, 6.0, 1.0, 2.0};
  const VectorField2D one = generate_mfl({twin}, 12, 12);
  const VectorField2D two = generate_mfl({twin, twin}, 12, 12);
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(std::abs(two.data()[i].p - 2.0 * one.data()[i].p) < 1e-12);
  }
}

TEST_CASE("q is antisymmetric about the pit row") {
  const VectorField2D f = generate_mfl({{10.0, 10.0, 1.0, 3.0}}, 21, 21);
  for (std::size_t x = 0; x < 21; ++x) {
    for (std::size_t d = 1; d <= 10; ++d) {
      CHECK(std::abs(f(x, 10 + d).q + f(x, 10 - d).q) < 1e-12);
      CHECK(std::abs(f(x, 10 + d).p - f(x, 10 - d).p) < 1e-12);
    }
  }
}

TEST_CASE("contribution decays monotonically along rays and is small far away") {
  const PitSpec pit{0.0, 0.0, 1.0, 2.0};
  const double peak = 2.0 * pit.depth / pit.radius;
  for (int k = 0; k < 16; ++k) {
    const double angle = k * 3.14159265358979 / 8.0;
    double last = peak;
    for (double r = 0.05; r < 40.0; r += 0.05) {
      const PlanarVector v = pit_contribution(pit, r * std::cos(angle), r * std::sin(angle));
      const double m = std::hypot(v.p, v.q);
      REQUIRE(m < last);
      last = m;
    }
    const PlanarVector far =
        pit_contribution(pit, 10 * pit.radius * std::cos(angle), 10 * pit.radius * std::sin(angle));
    CHECK(std::hypot(far.p, far.q) < 0.01 * peak);
  }
}

TEST_CASE("invalid pits are rejected") {
  CHECK_THROWS_AS(generate_mfl({{1, 1, 0.0, 1.0}}, 4, 4), DomainError);
  CHECK_THROWS_AS(generate_mfl({{1, 1, 1.0, -1.0}}, 4, 4), DomainError);
  CHECK_THROWS_AS(generate_mfl({{1, 1, NAN, 1.0}}, 4, 4), DomainError);
  CHECK_THROWS_AS(generate_mfl({}, 0, 4), DimensionError);
}

TEST_CASE("parse_pits") {
  CHECK(parse_pits("").empty());
  CHECK(parse_pits("  ").empty());
  const auto pits = parse_pits("1,2,3,4; 5.5,-6,0.5,2;");
  REQUIRE(pits.size() == 2);
  CHECK(pits[0].x == 1.0);
  CHECK(pits[0].radius == 4.0);
  CHECK(pits[1].x == 5.5);
  CHECK(pits[1].y == -6.0);
  CHECK(pits[1].depth == 0.5);
  CHECK_THROWS_AS(parse_pits("1,2,3"), DomainError);
  CHECK_THROWS_AS(parse_pits("1,2,3,4,5"), DomainError);
  CHECK_THROWS_AS(parse_pits("1,2,x,4"), DomainError);
  CHECK_THROWS_AS(parse_pits("1,2,0,4"), DomainError);
}
