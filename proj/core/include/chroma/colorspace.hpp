// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "chroma/plane.hpp"

namespace chroma {

// BT.601 color transforms with full-range [0, 255] clipping only; no
// studio-range legalization. Forward and inverse matrices are the
// conventional fixed-precision pair, which are not exact inverses of
// each other; the round-trip deviation is covered by tests.

// Y, Cb, Cr planes quantized to integers in [0, 255]. Cb/Cr may be
// quarter-sized once the 4:2:0 pipeline has subsampled them.
struct Ycbcr8Image {
  Plane y, cb, cr;
};

// Per pixel:
//   [Y ]   [ 0.257  0.504  0.098][R]   [ 16]
//   [Cb] = [-0.148 -0.291  0.439][G] + [128]
//   [Cr]   [ 0.439 -0.368 -0.071][B]   [128]
// Output stays in real precision. The Cb/Cr rows are evaluated in
// difference form (their coefficients sum to exactly zero in decimal),
// so neutral inputs R=G=B give Cb = Cr = 128 exactly.
YcbcrImage rgb_to_ycbcr(const RgbImage& image);

// Per pixel, applies
//   [R]   [1.164  0      1.596][Y  - 16]
//   [G] = [1.164 -0.391 -0.813][Cb - 128]
//   [B]   [1.164  2.018  0    ][Cr - 128]
// and clips each channel to [0, 255]. Real-precision output.
RgbImage ycbcr_to_rgb(const YcbcrImage& image);

// Rounds every sample half away from zero, then clips to [0, 255].
// Idempotent and order-preserving.
Plane quantize8(const Plane& plane);
double quantize8(double sample);

Ycbcr8Image quantize_ycbcr(const YcbcrImage& image);

}  // namespace chroma
