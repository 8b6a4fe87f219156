// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "chroma/plane.hpp"

namespace chroma {

// Quality metrics against an 8-bit peak of 255. PSNR-family scores return
// +infinity for bit-identical inputs; CSV writers print that as "inf".

// Mean squared difference pooled over all pixels and all three channels,
// then 10*log10(255^2 / CMSE).
double cpsnr(const RgbImage& reference, const RgbImage& test);

// Single-plane PSNR (used for Bayer CFA planes).
double psnr(const Plane& reference, const Plane& test);

// Structural similarity with the usual parameterization: 11x11 Gaussian
// window (sigma 1.5), K1 = 0.01, K2 = 0.03, dynamic range 255, biased
// (moment-matching) variance estimates, averaged over every window
// position that fits entirely inside the planes. Requires at least 11x11.
double ssim(const Plane& reference, const Plane& test);

// Mean of the per-channel SSIM values over R, G, B.
double ssimc(const RgbImage& reference, const RgbImage& test);

struct QualityScore {
  double cpsnr_db = 0.0;
  double psnr_db = 0.0;
  double ssim = 0.0;
};

}  // namespace chroma
