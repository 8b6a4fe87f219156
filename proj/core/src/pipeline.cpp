// SPDX-License-Identifier: Apache-2.0
#include "chroma/pipeline.hpp"

#include <random>
#include <utility>

namespace chroma {

EncodedPayload run_server(const RgbImage& image,
                          const PipelineConfig& config) {
  require_same_size(image, "run_server");
  if (image.width() % 2 != 0 || image.height() % 2 != 0) {
    throw DimensionError("run_server: image dimensions must be even");
  }
  image.r.require_finite();
  image.g.require_finite();
  image.b.require_finite();

  const YcbcrImage ycc = rgb_to_ycbcr(image);
  QuarterChroma quarter = subsample(ycc.cb, ycc.cr, config.subsampler);

  EncodedPayload payload;
  payload.width = image.width();
  payload.height = image.height();
  payload.planes = {quantize8(ycc.y), quantize8(quarter.cb),
                    quantize8(quarter.cr)};
  payload.side_info = hamming_encode(encode_side_info(
      quarter.producing_class, config.preferred_upsampler));
  return payload;
}

EncodedPayload channel(const EncodedPayload& payload, int flips,
                       std::uint64_t seed) {
  if (flips < 0 || flips > 7) {
    throw UsageError("channel: flips must be in [0, 7], got " +
                     std::to_string(flips));
  }
  EncodedPayload out = payload;
  if (flips == 0) return out;

  // Partial Fisher-Yates over the seven bit positions.
  std::mt19937_64 rng(seed);
  int positions[7] = {1, 2, 3, 4, 5, 6, 7};
  for (int i = 0; i < flips; ++i) {
    std::uniform_int_distribution<int> pick(i, 6);
    std::swap(positions[i], positions[pick(rng)]);
    out.side_info.bits ^= static_cast<std::uint8_t>(1 << (7 - positions[i]));
  }
  return out;
}

RgbImage run_client(const EncodedPayload& payload,
                    const PipelineConfig& config) {
  const int w = payload.width, h = payload.height;

  Plane cb, cr;
  if (config.rcri_enabled) {
    const HammingDecodeResult decoded = hamming_decode(payload.side_info);
    const ChromaClass cls = decoded.word.chroma_class();
    const UpsamplerKind process = decoded.word.upsampler();
    cb = reinterpolate(upsample(payload.planes.cb, process, w, h), cls,
                       process);
    cr = reinterpolate(upsample(payload.planes.cr, process, w, h), cls,
                       process);
  } else {
    cb = upsample(payload.planes.cb, config.naive_upsampler, w, h);
    cr = upsample(payload.planes.cr, config.naive_upsampler, w, h);
  }

  const RgbImage rgb =
      ycbcr_to_rgb({payload.planes.y, std::move(cb), std::move(cr)});
  return {quantize8(rgb.r), quantize8(rgb.g), quantize8(rgb.b)};
}

RgbImage run_pipeline(const RgbImage& image, const PipelineConfig& config) {
  return run_client(
      channel(run_server(image, config), config.channel_flips,
              config.rng_seed),
      config);
}

BayerImage run_bayer(const BayerImage& image, const PipelineConfig& config) {
  PipelineConfig local = config;
  local.cfa_pattern = image.pattern;
  const RgbImage demosaiced = demosaic_bilinear(image);
  const RgbImage reconstructed = run_pipeline(demosaiced, local);
  return mosaic(reconstructed, image.pattern);
}

}  // namespace chroma
