// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "chroma/plane.hpp"

namespace chroma {

// The five traditional 4:2:0 subsamplers.
enum class SubsamplerKind { D, MpegB, L, A, R };

// Every subsampler is classified by the continuous position inside the
// 2x2 block that its output value represents. Block coordinates (x, y)
// follow the convention x rightward, y upward, with the block's top-left
// sample at (0, 1).
enum class ChromaClass { TopLeft, Left, Mid, Right };

struct BlockCoord {
  double x, y;
};
struct RasterOffset {
  double row, col;
};

// Continuous block coordinate represented by a class:
// TopLeft (0,1), Left (0,1/2), Mid (1/2,1/2), Right (1,1/2).
BlockCoord scp(ChromaClass cls);

// The same position as a raster offset from the block's top-left sample,
// via (row, col) = (1 - y, x):
// TopLeft (0,0), Left (0.5,0), Mid (0.5,0.5), Right (0.5,1.0).
RasterOffset block_offset(ChromaClass cls);

// D and MpegB produce top-left-sited samples; L, A, R produce
// Left/Mid/Right-sited ones.
ChromaClass class_of(SubsamplerKind kind);

// Quarter-resolution Cb/Cr pair tagged with the class that produced it.
struct QuarterChroma {
  Plane cb, cr;
  ChromaClass producing_class;
};

// Subsamples both chroma planes to quarter size. For the 2x2 block with
// top-left full-resolution sample (2i, 2j):
//   D     -> the (2i, 2j) sample
//   L     -> mean of the left column, (2i,2j) and (2i+1,2j)
//   R     -> mean of the right column
//   A     -> mean of all four samples
//   MpegB -> separable 13-tap filter [2,0,-4,-3,5,19,26,19,5,-3,-4,0,2]/64
//            (horizontal then vertical, mirror-extended borders)
//            evaluated at (2i, 2j)
// Throws DimensionError unless both planes share even dimensions.
QuarterChroma subsample(const Plane& cb, const Plane& cr, SubsamplerKind kind);

const char* subsampler_name(SubsamplerKind kind);   // "d", "mpegb", ...
const char* class_name(ChromaClass cls);            // "topleft", "left", ...
SubsamplerKind parse_subsampler(const std::string& name);

}  // namespace chroma
