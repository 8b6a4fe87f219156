// SPDX-License-Identifier: Apache-2.0
#include <bit>
#include <cmath>
#include <random>

#include "chroma/metrics.hpp"
#include "chroma/pipeline.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chroma;

namespace {

RgbImage solid(int w, int h, double r, double g, double b) {
  return {Plane(w, h, r), Plane(w, h, g), Plane(w, h, b)};
}

double worst_channel_error(const RgbImage& a, const RgbImage& b) {
  return std::max({testutil::max_abs_diff(a.r, b.r),
                   testutil::max_abs_diff(a.g, b.g),
                   testutil::max_abs_diff(a.b, b.b)});
}

// An image whose chroma planes are affine ramps; its CI damage is large
// and exactly correctable.
RgbImage affine_chroma_image(int w, int h) {
  YcbcrImage ycc{Plane(w, h, 130.0), Plane(w, h), Plane(w, h)};
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      ycc.cb.at(r, c) = 80.0 + 3.0 * r + 1.0 * c;
      ycc.cr.at(r, c) = 90.0 + 1.5 * r + 2.0 * c;
    }
  }
  const RgbImage rgb = ycbcr_to_rgb(ycc);
  return {quantize8(rgb.r), quantize8(rgb.g), quantize8(rgb.b)};
}

double cmse(const RgbImage& a, const RgbImage& b) {
  double acc = 0.0;
  for (auto [pa, pb] : {std::pair{&a.r, &b.r}, std::pair{&a.g, &b.g},
                        std::pair{&a.b, &b.b}}) {
    for (int r = 0; r < pa->height(); ++r) {
      for (int c = 0; c < pa->width(); ++c) {
        const double d = pa->at(r, c) - pb->at(r, c);
        acc += d * d;
      }
    }
  }
  return acc / (3.0 * a.width() * a.height());
}

}  // namespace

TEST_CASE("server output on constant gray 128") {
  PipelineConfig config;
  config.subsampler = SubsamplerKind::A;
  config.preferred_upsampler = UpsamplerKind::Bili;
  const EncodedPayload payload =
      run_server(solid(8, 6, 128, 128, 128), config);

  CHECK(payload.width == 8);
  CHECK(payload.height == 6);
  for (double v : payload.planes.y.samples()) CHECK(v == 126.0);
  for (double v : payload.planes.cb.samples()) CHECK(v == 128.0);
  for (double v : payload.planes.cr.samples()) CHECK(v == 128.0);
  CHECK(payload.side_info.bits == 0b0011001);
}

TEST_CASE("server side info for direct subsampling with copy preference") {
  PipelineConfig config;
  config.subsampler = SubsamplerKind::D;
  config.preferred_upsampler = UpsamplerKind::Copy;
  const EncodedPayload payload =
      run_server(solid(4, 4, 10, 30, 50), config);
  CHECK(payload.side_info.bits == 0b0000000);
}

TEST_CASE("quarter planes have quarter dimensions") {
  PipelineConfig config;
  const EncodedPayload payload = run_server(solid(4, 4, 1, 2, 3), config);
  CHECK(payload.planes.cb.width() == 2);
  CHECK(payload.planes.cb.height() == 2);
  CHECK(payload.planes.y.width() == 4);
}

TEST_CASE("odd dimensions are rejected at the server") {
  PipelineConfig config;
  CHECK_THROWS_AS(run_server(solid(5, 4, 0, 0, 0), config), DimensionError);
}

TEST_CASE("channel with zero flips is the identity") {
  PipelineConfig config;
  const EncodedPayload payload = run_server(solid(4, 4, 9, 9, 9), config);
  const EncodedPayload same = channel(payload, 0, 123);
  CHECK(same.side_info == payload.side_info);
  CHECK(same.planes.y == payload.planes.y);
}

TEST_CASE("channel flips exactly the requested number of distinct bits") {
  PipelineConfig config;
  const EncodedPayload payload = run_server(solid(4, 4, 9, 9, 9), config);
  std::mt19937_64 seeds(61);
  for (int flips = 0; flips <= 7; ++flips) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint64_t seed = seeds();
      const EncodedPayload out = channel(payload, flips, seed);
      const unsigned delta = payload.side_info.bits ^ out.side_info.bits;
      CHECK(std::popcount(delta) == flips);
      CHECK((out.side_info.bits & 0x80) == 0);
      // deterministic for a fixed seed
      const EncodedPayload again = channel(payload, flips, seed);
      CHECK(again.side_info == out.side_info);
    }
  }
  CHECK_THROWS_AS(channel(payload, 8, 0), UsageError);
  CHECK_THROWS_AS(channel(payload, -1, 0), UsageError);
}

TEST_CASE("single corrupted bit never changes the rcri reconstruction") {
  const RgbImage image = affine_chroma_image(16, 16);
  PipelineConfig config;
  config.subsampler = SubsamplerKind::L;
  config.rcri_enabled = true;
  const EncodedPayload payload = run_server(image, config);
  const RgbImage clean = run_client(payload, config);

  for (int pos = 1; pos <= 7; ++pos) {
    EncodedPayload corrupted = payload;
    corrupted.side_info.bits ^= static_cast<std::uint8_t>(1 << (7 - pos));
    const RgbImage recon = run_client(corrupted, config);
    CHECK(worst_channel_error(clean, recon) == 0.0);
  }
}

TEST_CASE("rcri reconstruction ignores the naive upsampler setting") {
  const RgbImage image = affine_chroma_image(16, 16);
  PipelineConfig config;
  config.subsampler = SubsamplerKind::A;
  config.rcri_enabled = true;
  const EncodedPayload payload = run_server(image, config);

  config.naive_upsampler = UpsamplerKind::Copy;
  const RgbImage first = run_client(payload, config);
  for (UpsamplerKind up : {UpsamplerKind::Bili, UpsamplerKind::Nedi,
                           UpsamplerKind::Bicu}) {
    config.naive_upsampler = up;
    CHECK(worst_channel_error(first, run_client(payload, config)) == 0.0);
  }
}

TEST_CASE("rcri beats the naive client on affine chroma") {
  const RgbImage image = affine_chroma_image(32, 32);
  PipelineConfig config;
  config.subsampler = SubsamplerKind::L;
  config.preferred_upsampler = UpsamplerKind::Bili;
  config.naive_upsampler = UpsamplerKind::Bili;

  config.rcri_enabled = false;
  const RgbImage naive = run_pipeline(image, config);
  config.rcri_enabled = true;
  const RgbImage rcri = run_pipeline(image, config);

  CHECK(cmse(image, rcri) < cmse(image, naive));
}

TEST_CASE("constant image round trip stays within one level") {
  const RgbImage image = solid(16, 16, 57, 201, 104);
  for (SubsamplerKind sub : {SubsamplerKind::D, SubsamplerKind::MpegB,
                             SubsamplerKind::L, SubsamplerKind::A,
                             SubsamplerKind::R}) {
    for (bool rcri : {false, true}) {
      PipelineConfig config;
      config.subsampler = sub;
      config.rcri_enabled = rcri;
      config.naive_upsampler = UpsamplerKind::Nedi;
      const RgbImage recon = run_pipeline(image, config);
      CHECK(worst_channel_error(image, recon) <= 1.0);
    }
  }
}

TEST_CASE("the seven benign combinations match rcri exactly") {
  // TopLeft classes or a Copy process: naive and rcri clients agree once
  // the preference equals the naive choice.
  const RgbImage image = affine_chroma_image(16, 16);
  const struct {
    SubsamplerKind sub;
    UpsamplerKind up;
  } benign[] = {
      {SubsamplerKind::D, UpsamplerKind::Copy},
      {SubsamplerKind::D, UpsamplerKind::Bili},
      {SubsamplerKind::D, UpsamplerKind::Nedi},
      {SubsamplerKind::D, UpsamplerKind::Bicu},
      {SubsamplerKind::MpegB, UpsamplerKind::Bicu},
      {SubsamplerKind::L, UpsamplerKind::Copy},
      {SubsamplerKind::A, UpsamplerKind::Copy},
      {SubsamplerKind::R, UpsamplerKind::Copy},
  };
  for (const auto& [sub, up] : benign) {
    PipelineConfig config;
    config.subsampler = sub;
    config.preferred_upsampler = up;
    config.naive_upsampler = up;
    const EncodedPayload payload = run_server(image, config);

    config.rcri_enabled = false;
    const RgbImage naive = run_client(payload, config);
    config.rcri_enabled = true;
    const RgbImage rcri = run_client(payload, config);
    CHECK(worst_channel_error(naive, rcri) == 0.0);
  }
}

TEST_CASE("bayer pipeline on constants") {
  for (CfaPattern pat : {CfaPattern::Grbg, CfaPattern::Rggb}) {
    const BayerImage bayer{Plane(16, 16, 77.0), pat};
    PipelineConfig config;
    config.subsampler = SubsamplerKind::A;
    const BayerImage recon = run_bayer(bayer, config);
    CHECK(recon.pattern == pat);
    CHECK(testutil::max_abs_diff(recon.plane, bayer.plane) <= 1.0);
  }
}

TEST_CASE("bayer rcri beats the naive client on affine chroma") {
  const RgbImage rgb = affine_chroma_image(32, 32);
  const BayerImage bayer = mosaic(rgb, CfaPattern::Grbg);

  PipelineConfig config;
  config.subsampler = SubsamplerKind::A;
  config.preferred_upsampler = UpsamplerKind::Bili;
  config.naive_upsampler = UpsamplerKind::Bicu;

  config.rcri_enabled = false;
  const BayerImage naive = run_bayer(bayer, config);
  config.rcri_enabled = true;
  const BayerImage rcri = run_bayer(bayer, config);

  CHECK(psnr(bayer.plane, rcri.plane) > psnr(bayer.plane, naive.plane));
}
