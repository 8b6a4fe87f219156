// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "chroma/plane.hpp"

namespace chroma {

// Client-side chroma upsampling processes. All of them anchor the
// received samples at even output coordinates: U(2i, 2j) = quarter(i, j).
enum class UpsamplerKind { Copy, Bili, Nedi, Bicu };

// Doubles a quarter plane to out_width x out_height (which must be exactly
// twice the input in each axis).
//   Copy -> each 2x2 block filled with its top-left sample
//   Bili -> U(r, c) = sample_bilinear(quarter, r/2, c/2)
//   Bicu -> U(r, c) = sample_bicubic(quarter, r/2, c/2)
//   Nedi -> nedi_upscale(quarter)
Plane upsample(const Plane& quarter, UpsamplerKind kind, int out_width,
               int out_height);

// Edge-directed 2x upscaling. Two passes over the doubled grid: the first
// predicts the odd/odd pixels from their four diagonal neighbors, the
// second predicts the remaining odd-phase pixels from their four axial
// neighbors on the 45-degree-rotated lattice. Prediction weights come
// from least squares over a 4x4 window of known samples (16 equations,
// 4 unknowns, normal equations solved with partial pivoting); windows
// touching the border, near-singular systems (|det| < 1e-10) and weights
// with magnitude > 2 fall back to the bilinear value. Planes smaller than
// 4x4 fall back to bilinear entirely.
Plane nedi_upscale(const Plane& quarter);

const char* upsampler_name(UpsamplerKind kind);  // "copy", "bili", ...
UpsamplerKind parse_upsampler(const std::string& name);

}  // namespace chroma
