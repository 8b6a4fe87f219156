// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include "chroma/plane.hpp"
#include "chroma/sampling.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chroma;
using testutil::plane_from;
using testutil::plane_of;
using testutil::random_plane;

TEST_CASE("plane construction enforces minimum size") {
  CHECK_THROWS_AS(Plane(1, 5), DimensionError);
  CHECK_THROWS_AS(Plane(5, 1), DimensionError);
  CHECK_THROWS_AS(Plane(0, 0), DimensionError);
  const Plane p(3, 2, 7.0);
  CHECK(p.samples().size() == 6);
  CHECK(p.at(1, 2) == 7.0);
}

TEST_CASE("require_finite rejects NaN and infinity") {
  Plane p(2, 2, 1.0);
  CHECK_NOTHROW(p.require_finite());
  p.at(0, 1) = std::nan("");
  CHECK_THROWS_AS(p.require_finite(), FormatError);
  p.at(0, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(p.require_finite(), FormatError);
}

TEST_CASE("bilinear sampling examples") {
  const Plane p = plane_of({{1, 2}, {3, 4}});
  CHECK(sample_bilinear(p, 0.5, 0.5) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(sample_bilinear(p, 0, 1) == 2.0);

  const Plane affine = plane_from(4, 4, [](int r, int c) {
    return 3.0 * r + 5.0 * c + 7.0;
  });
  CHECK(sample_bilinear(affine, 0.25, 0.75) ==
        doctest::Approx(11.5).epsilon(1e-12));
}

TEST_CASE("bilinear clamps out-of-range coordinates") {
  const Plane p = plane_of({{1, 2}, {3, 4}});
  CHECK(sample_bilinear(p, -5.0, -5.0) == 1.0);
  CHECK(sample_bilinear(p, 10.0, 10.0) == 4.0);
  CHECK(sample_bilinear(p, 0.5, 99.0) == 3.0);
}

TEST_CASE("bicubic sampling examples") {
  const Plane p = plane_of({{1, 2}, {3, 4}});
  CHECK(sample_bicubic(p, 0, 0) == 1.0);

  const Plane nine(5, 4, 9.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(0.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    CHECK(sample_bicubic(nine, coord(rng), coord(rng)) ==
          doctest::Approx(9.0).epsilon(1e-12));
  }

  const Plane affine =
      plane_from(6, 6, [](int r, int c) { return 2.0 * r + c; });
  CHECK(sample_bicubic(affine, 1.5, 1.5) ==
        doctest::Approx(4.5).epsilon(1e-12));
}

TEST_CASE("both kernels reproduce affine fields in the interior") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coef(-4.0, 4.0);
  for (int trial = 0; trial < 25; ++trial) {
    const double alpha = coef(rng), beta = coef(rng), gamma = coef(rng) * 20;
    const Plane p = plane_from(9, 8, [&](int r, int c) {
      return alpha * r + beta * c + gamma;
    });
    // Bilinear support always fits for in-range coordinates; bicubic needs
    // a 2-pixel margin in the sampled plane.
    std::uniform_real_distribution<double> rc_bili(0.0, 7.0);
    std::uniform_real_distribution<double> cc_bili(0.0, 8.0);
    std::uniform_real_distribution<double> rc_bicu(1.0, 5.999);
    std::uniform_real_distribution<double> cc_bicu(1.0, 6.999);
    for (int i = 0; i < 20; ++i) {
      const double r1 = rc_bili(rng), c1 = cc_bili(rng);
      CHECK(std::abs(sample_bilinear(p, r1, c1) -
                     (alpha * r1 + beta * c1 + gamma)) < 1e-9);
      const double r2 = rc_bicu(rng), c2 = cc_bicu(rng);
      CHECK(std::abs(sample_bicubic(p, r2, c2) -
                     (alpha * r2 + beta * c2 + gamma)) < 1e-9);
    }
  }
}

TEST_CASE("both kernels are exact at integer coordinates") {
  std::mt19937_64 rng(99);
  const Plane p = random_plane(7, 6, rng);
  for (int r = 0; r < p.height(); ++r) {
    for (int c = 0; c < p.width(); ++c) {
      CHECK(sample_bilinear(p, r, c) == p.at(r, c));
      CHECK(sample_bicubic(p, r, c) == p.at(r, c));
    }
  }
}
