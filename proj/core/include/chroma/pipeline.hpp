// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "chroma/bayer.hpp"
#include "chroma/colorspace.hpp"
#include "chroma/plane.hpp"
#include "chroma/rcri.hpp"
#include "chroma/subsampling.hpp"
#include "chroma/upsampling.hpp"

namespace chroma {

// Parameters for one end-to-end run. The codec is the identity (lossless):
// planes cross the channel exactly as quantized, so results are
// machine-independent and the side-information word is the only thing the
// channel can corrupt.
struct PipelineConfig {
  SubsamplerKind subsampler = SubsamplerKind::A;
  // Process the server recommends to the client (signaled in the side
  // information).
  UpsamplerKind preferred_upsampler = UpsamplerKind::Bili;
  // Process a side-information-blind client would pick on its own.
  UpsamplerKind naive_upsampler = UpsamplerKind::Bili;
  bool rcri_enabled = true;
  int channel_flips = 0;  // bits of the side information to corrupt, <= 7
  std::uint64_t rng_seed = 0;
  CfaPattern cfa_pattern = CfaPattern::Grbg;  // Bayer branch only
};

// Everything that crosses the encoder/decoder boundary: quantized luma at
// full resolution, quantized quarter-size chroma, the protected
// side-information word, and the original dimensions.
struct EncodedPayload {
  Ycbcr8Image planes;  // y full size; cb/cr quarter size
  HammingWord side_info;
  int width = 0;
  int height = 0;
};

// Server side: color transform, chroma subsampling, quantization at the
// codec boundary, side-information encoding. Requires even dimensions.
EncodedPayload run_server(const RgbImage& image, const PipelineConfig& config);

// Flips `flips` distinct uniformly chosen bit positions of the
// side-information word; the image planes are untouched. Deterministic for
// a fixed seed. Throws UsageError when flips > 7 or flips < 0.
EncodedPayload channel(const EncodedPayload& payload, int flips,
                       std::uint64_t seed);

// Client side. With rcri_enabled the side information is decoded (single
// bit errors corrected), the preferred upsampler is applied and the
// class displacement re-interpolated away. Without it the client ignores
// the side information and applies config.naive_upsampler as-is, which
// reproduces the process-inconsistency and coordinate-inconsistency
// degradations. Output is the quantized reconstructed RGB image.
RgbImage run_client(const EncodedPayload& payload,
                    const PipelineConfig& config);

// run_server -> channel -> run_client in one call.
RgbImage run_pipeline(const RgbImage& image, const PipelineConfig& config);

// Bayer branch: demosaic -> run_server -> channel -> run_client -> mosaic
// with the input's own pattern. Requires even dimensions of at least 4x4.
BayerImage run_bayer(const BayerImage& image, const PipelineConfig& config);

}  // namespace chroma
