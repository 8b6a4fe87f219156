// SPDX-License-Identifier: Apache-2.0
#include "chroma/subsampling.hpp"

#include <array>

namespace chroma {

BlockCoord scp(ChromaClass cls) {
  switch (cls) {
    case ChromaClass::TopLeft: return {0.0, 1.0};
    case ChromaClass::Left:    return {0.0, 0.5};
    case ChromaClass::Mid:     return {0.5, 0.5};
    case ChromaClass::Right:   return {1.0, 0.5};
  }
  throw UsageError("invalid chroma class");
}

RasterOffset block_offset(ChromaClass cls) {
  const BlockCoord p = scp(cls);
  return {1.0 - p.y, p.x};
}

ChromaClass class_of(SubsamplerKind kind) {
  switch (kind) {
    case SubsamplerKind::D:
    case SubsamplerKind::MpegB: return ChromaClass::TopLeft;
    case SubsamplerKind::L:     return ChromaClass::Left;
    case SubsamplerKind::A:     return ChromaClass::Mid;
    case SubsamplerKind::R:     return ChromaClass::Right;
  }
  throw UsageError("invalid subsampler kind");
}

namespace {

constexpr std::array<double, 13> kMpegBMask = {2, 0, -4, -3, 5, 19, 26,
                                               19, 5, -3, -4, 0, 2};
constexpr double kMpegBScale = 1.0 / 64.0;

// Whole-sample mirror: -1 -> 1, n -> n-2. Keeps index parity, so filter
// taps never cross into the other chroma phase.
int mirror(int i, int n) {
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
  }
  return i;
}

// 13-tap filtering along rows at even columns, then along columns at even
// rows, landing on the block's top-left sample.
Plane subsample_mpegb(const Plane& p) {
  const int w = p.width(), h = p.height();
  const int qw = w / 2, qh = h / 2;

  Plane horz(qw, h);
  for (int r = 0; r < h; ++r) {
    for (int j = 0; j < qw; ++j) {
      double acc = 0.0;
      for (int t = 0; t < 13; ++t) {
        acc += kMpegBMask[t] * p.at(r, mirror(2 * j + t - 6, w));
      }
      horz.at(r, j) = acc * kMpegBScale;
    }
  }

  Plane out(qw, qh);
  for (int i = 0; i < qh; ++i) {
    for (int j = 0; j < qw; ++j) {
      double acc = 0.0;
      for (int t = 0; t < 13; ++t) {
        acc += kMpegBMask[t] * horz.at(mirror(2 * i + t - 6, h), j);
      }
      out.at(i, j) = acc * kMpegBScale;
    }
  }
  return out;
}

Plane subsample_plane(const Plane& p, SubsamplerKind kind) {
  if (kind == SubsamplerKind::MpegB) return subsample_mpegb(p);

  const int qw = p.width() / 2, qh = p.height() / 2;
  Plane out(qw, qh);
  for (int i = 0; i < qh; ++i) {
    for (int j = 0; j < qw; ++j) {
      const int r = 2 * i, c = 2 * j;
      double v = 0.0;
      switch (kind) {
        case SubsamplerKind::D:
          v = p.at(r, c);
          break;
        case SubsamplerKind::L:
          v = 0.5 * (p.at(r, c) + p.at(r + 1, c));
          break;
        case SubsamplerKind::R:
          v = 0.5 * (p.at(r, c + 1) + p.at(r + 1, c + 1));
          break;
        case SubsamplerKind::A:
          v = 0.25 * (p.at(r, c) + p.at(r, c + 1) + p.at(r + 1, c) +
                      p.at(r + 1, c + 1));
          break;
        case SubsamplerKind::MpegB:
          break;  // handled above
      }
      out.at(i, j) = v;
    }
  }
  return out;
}

}  // namespace

QuarterChroma subsample(const Plane& cb, const Plane& cr,
                        SubsamplerKind kind) {
  if (!cb.same_size(cr)) {
    throw DimensionError("subsample: cb and cr dimensions disagree");
  }
  if (!cb.has_even_dimensions()) {
    throw DimensionError("subsample: plane dimensions must be even, got " +
                         std::to_string(cb.width()) + "x" +
                         std::to_string(cb.height()));
  }
  return {subsample_plane(cb, kind), subsample_plane(cr, kind),
          class_of(kind)};
}

const char* subsampler_name(SubsamplerKind kind) {
  switch (kind) {
    case SubsamplerKind::D:     return "d";
    case SubsamplerKind::MpegB: return "mpegb";
    case SubsamplerKind::L:     return "l";
    case SubsamplerKind::A:     return "a";
    case SubsamplerKind::R:     return "r";
  }
  return "?";
}

const char* class_name(ChromaClass cls) {
  switch (cls) {
    case ChromaClass::TopLeft: return "topleft";
    case ChromaClass::Left:    return "left";
    case ChromaClass::Mid:     return "mid";
    case ChromaClass::Right:   return "right";
  }
  return "?";
}

SubsamplerKind parse_subsampler(const std::string& name) {
  if (name == "d") return SubsamplerKind::D;
  if (name == "mpegb") return SubsamplerKind::MpegB;
  if (name == "l") return SubsamplerKind::L;
  if (name == "a") return SubsamplerKind::A;
  if (name == "r") return SubsamplerKind::R;
  throw UsageError("unknown subsampler '" + name +
                   "' (expected d, mpegb, l, a, or r)");
}

}  // namespace chroma
