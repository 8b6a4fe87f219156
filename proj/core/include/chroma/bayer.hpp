// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "chroma/plane.hpp"

namespace chroma {

// The four Bayer color filter array patterns, named by the channels at
// positions (0,0) (0,1) (1,0) (1,1) of every 2x2 tile. Each tile holds
// two G, one R and one B sample.
enum class CfaPattern { Grbg, Rggb, Bggr, Gbrg };

enum class CfaChannel { R, G, B };

CfaChannel cfa_channel_at(CfaPattern pattern, int r, int c);

// Single-plane CFA image plus the pattern that indexes it.
struct BayerImage {
  Plane plane;
  CfaPattern pattern;
};

// Extracts the pattern-dictated channel at every pixel. Throws
// DimensionError on odd dimensions.
BayerImage mosaic(const RgbImage& image, CfaPattern pattern);

// Bilinear demosaicking: known samples copy through unchanged; G at R/B
// sites is the mean of the 4 axial G neighbors; R/B at G sites the mean of
// the 2 axial same-channel neighbors; R at B sites (and B at R) the mean
// of the 4 diagonal neighbors. Missing border neighbors are replaced by
// mirroring about the edge sample, which lands on the nearest sample of
// the same channel. Requires even dimensions of at least 4x4.
RgbImage demosaic_bilinear(const BayerImage& bayer);

const char* pattern_name(CfaPattern pattern);  // "grbg", "rggb", ...
CfaPattern parse_pattern(const std::string& name);

}  // namespace chroma
