// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "chroma/bayer.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chroma;

namespace {

const CfaPattern kPatterns[] = {CfaPattern::Grbg, CfaPattern::Rggb,
                                CfaPattern::Bggr, CfaPattern::Gbrg};

RgbImage solid(int w, int h, double r, double g, double b) {
  return {Plane(w, h, r), Plane(w, h, g), Plane(w, h, b)};
}

}  // namespace

TEST_CASE("every tile holds two G, one R, one B") {
  for (CfaPattern pat : kPatterns) {
    int g = 0, r = 0, b = 0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        switch (cfa_channel_at(pat, i, j)) {
          case CfaChannel::R: ++r; break;
          case CfaChannel::G: ++g; break;
          case CfaChannel::B: ++b; break;
        }
      }
    }
    CHECK(g == 2);
    CHECK(r == 1);
    CHECK(b == 1);
  }
}

TEST_CASE("mosaic of a constant color lays out the tile") {
  const BayerImage bayer = mosaic(solid(4, 4, 10, 20, 30), CfaPattern::Grbg);
  CHECK(bayer.plane.at(0, 0) == 20.0);
  CHECK(bayer.plane.at(0, 1) == 10.0);
  CHECK(bayer.plane.at(1, 0) == 30.0);
  CHECK(bayer.plane.at(1, 1) == 20.0);
  CHECK(bayer.plane.at(2, 2) == 20.0);
  CHECK(bayer.plane.at(2, 3) == 10.0);
}

TEST_CASE("gray images mosaic to a constant plane") {
  for (CfaPattern pat : kPatterns) {
    const BayerImage bayer = mosaic(solid(6, 4, 99, 99, 99), pat);
    for (double v : bayer.plane.samples()) CHECK(v == 99.0);
  }
}

TEST_CASE("demosaic of a constant bayer plane is constant rgb") {
  for (CfaPattern pat : kPatterns) {
    const RgbImage rgb = demosaic_bilinear({Plane(6, 6, 55.0), pat});
    for (double v : rgb.r.samples()) CHECK(v == 55.0);
    for (double v : rgb.g.samples()) CHECK(v == 55.0);
    for (double v : rgb.b.samples()) CHECK(v == 55.0);
  }
}

TEST_CASE("constant-color images are recovered exactly") {
  const RgbImage original = solid(8, 6, 10, 20, 30);
  for (CfaPattern pat : kPatterns) {
    const RgbImage back = demosaic_bilinear(mosaic(original, pat));
    CHECK(testutil::max_abs_diff(back.r, original.r) == 0.0);
    CHECK(testutil::max_abs_diff(back.g, original.g) == 0.0);
    CHECK(testutil::max_abs_diff(back.b, original.b) == 0.0);
  }
}

TEST_CASE("known samples pass through demosaicking unchanged") {
  std::mt19937_64 rng(41);
  for (CfaPattern pat : kPatterns) {
    const BayerImage bayer{testutil::random_plane8(8, 8, rng), pat};
    const RgbImage rgb = demosaic_bilinear(bayer);
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) {
        const Plane* channel = nullptr;
        switch (cfa_channel_at(pat, r, c)) {
          case CfaChannel::R: channel = &rgb.r; break;
          case CfaChannel::G: channel = &rgb.g; break;
          case CfaChannel::B: channel = &rgb.b; break;
        }
        CHECK(channel->at(r, c) == bayer.plane.at(r, c));
      }
    }
  }
}

TEST_CASE("mosaic of demosaic is the identity") {
  std::mt19937_64 rng(42);
  for (CfaPattern pat : kPatterns) {
    const BayerImage bayer{testutil::random_plane8(10, 8, rng), pat};
    const BayerImage round = mosaic(demosaic_bilinear(bayer), pat);
    CHECK(round.plane == bayer.plane);
    CHECK(round.pattern == bayer.pattern);
  }
}

TEST_CASE("patterns disagree on generic images") {
  std::mt19937_64 rng(43);
  const RgbImage img = testutil::random_rgb8(8, 8, rng);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      CHECK(mosaic(img, kPatterns[i]).plane != mosaic(img, kPatterns[j]).plane);
    }
  }
}

TEST_CASE("dimension contracts") {
  std::mt19937_64 rng(44);
  const RgbImage odd = testutil::random_rgb8(7, 6, rng);
  CHECK_THROWS_AS(mosaic(odd, CfaPattern::Grbg), DimensionError);
  CHECK_THROWS_AS(demosaic_bilinear({Plane(2, 2, 0.0), CfaPattern::Grbg}),
                  DimensionError);
}

TEST_CASE("pattern names round trip") {
  for (CfaPattern pat : kPatterns) {
    CHECK(parse_pattern(pattern_name(pat)) == pat);
  }
  CHECK_THROWS_AS(parse_pattern("xyz"), UsageError);
}
