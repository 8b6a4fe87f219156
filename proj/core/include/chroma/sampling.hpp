// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "chroma/plane.hpp"

namespace chroma {

// Fractional-coordinate sampling kernels. Both samplers clamp (r, c) to
// [0, height-1] x [0, width-1] and replicate boundary rows/columns for
// taps that fall outside the grid, so any finite coordinate is valid.
// Both return the stored sample exactly at integer coordinates and
// reproduce affine fields exactly wherever the full kernel support lies
// inside the grid (a 1-pixel border for bilinear, 2 for bicubic).

// Bilinear blend of the four surrounding integer-grid samples.
double sample_bilinear(const Plane& plane, double r, double c);

// Catmull-Rom cubic convolution (kernel parameter a = -0.5) over the
// 4x4 neighborhood.
double sample_bicubic(const Plane& plane, double r, double c);

}  // namespace chroma
