// SPDX-License-Identifier: Apache-2.0
#include "chroma/bayer.hpp"

namespace chroma {

namespace {

// Tile layouts in row-major (0,0) (0,1) (1,0) (1,1) order.
constexpr CfaChannel kTiles[4][4] = {
    {CfaChannel::G, CfaChannel::R, CfaChannel::B, CfaChannel::G},  // Grbg
    {CfaChannel::R, CfaChannel::G, CfaChannel::G, CfaChannel::B},  // Rggb
    {CfaChannel::B, CfaChannel::G, CfaChannel::G, CfaChannel::R},  // Bggr
    {CfaChannel::G, CfaChannel::B, CfaChannel::R, CfaChannel::G},  // Gbrg
};

// Mirror about the edge sample: -1 -> 1, n -> n-2. Parity-preserving, so
// a reflected read always hits the same CFA channel.
int mirror(int i, int n) {
  if (i < 0) return -i;
  if (i >= n) return 2 * (n - 1) - i;
  return i;
}

const Plane& channel_plane(const RgbImage& image, CfaChannel ch) {
  switch (ch) {
    case CfaChannel::R: return image.r;
    case CfaChannel::G: return image.g;
    case CfaChannel::B: return image.b;
  }
  throw UsageError("invalid CFA channel");
}

}  // namespace

CfaChannel cfa_channel_at(CfaPattern pattern, int r, int c) {
  return kTiles[static_cast<int>(pattern)][(r & 1) * 2 + (c & 1)];
}

BayerImage mosaic(const RgbImage& image, CfaPattern pattern) {
  require_same_size(image, "mosaic");
  if (image.width() % 2 != 0 || image.height() % 2 != 0) {
    throw DimensionError("mosaic: image dimensions must be even");
  }
  Plane out(image.width(), image.height());
  for (int r = 0; r < out.height(); ++r) {
    for (int c = 0; c < out.width(); ++c) {
      out.at(r, c) = channel_plane(image, cfa_channel_at(pattern, r, c))
                         .at(r, c);
    }
  }
  return {std::move(out), pattern};
}

RgbImage demosaic_bilinear(const BayerImage& bayer) {
  const Plane& p = bayer.plane;
  const int w = p.width(), h = p.height();
  if (w % 2 != 0 || h % 2 != 0 || w < 4 || h < 4) {
    throw DimensionError("demosaic: needs even dimensions of at least 4x4");
  }

  RgbImage out{Plane(w, h), Plane(w, h), Plane(w, h)};
  const CfaPattern pat = bayer.pattern;

  const auto axial4 = [&](int r, int c) {
    return 0.25 * (p.at(mirror(r - 1, h), c) + p.at(mirror(r + 1, h), c) +
                   p.at(r, mirror(c - 1, w)) + p.at(r, mirror(c + 1, w)));
  };
  const auto diag4 = [&](int r, int c) {
    return 0.25 * (p.at(mirror(r - 1, h), mirror(c - 1, w)) +
                   p.at(mirror(r - 1, h), mirror(c + 1, w)) +
                   p.at(mirror(r + 1, h), mirror(c - 1, w)) +
                   p.at(mirror(r + 1, h), mirror(c + 1, w)));
  };
  const auto horizontal2 = [&](int r, int c) {
    return 0.5 * (p.at(r, mirror(c - 1, w)) + p.at(r, mirror(c + 1, w)));
  };
  const auto vertical2 = [&](int r, int c) {
    return 0.5 * (p.at(mirror(r - 1, h), c) + p.at(mirror(r + 1, h), c));
  };

  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const CfaChannel site = cfa_channel_at(pat, r, c);
      const double known = p.at(r, c);
      switch (site) {
        case CfaChannel::G:
          out.g.at(r, c) = known;
          // R and B occupy one axis each through a G site.
          if (cfa_channel_at(pat, r, c + 1) == CfaChannel::R) {
            out.r.at(r, c) = horizontal2(r, c);
            out.b.at(r, c) = vertical2(r, c);
          } else {
            out.r.at(r, c) = vertical2(r, c);
            out.b.at(r, c) = horizontal2(r, c);
          }
          break;
        case CfaChannel::R:
          out.r.at(r, c) = known;
          out.g.at(r, c) = axial4(r, c);
          out.b.at(r, c) = diag4(r, c);
          break;
        case CfaChannel::B:
          out.b.at(r, c) = known;
          out.g.at(r, c) = axial4(r, c);
          out.r.at(r, c) = diag4(r, c);
          break;
      }
    }
  }
  return out;
}

const char* pattern_name(CfaPattern pattern) {
  switch (pattern) {
    case CfaPattern::Grbg: return "grbg";
    case CfaPattern::Rggb: return "rggb";
    case CfaPattern::Bggr: return "bggr";
    case CfaPattern::Gbrg: return "gbrg";
  }
  return "?";
}

CfaPattern parse_pattern(const std::string& name) {
  if (name == "grbg") return CfaPattern::Grbg;
  if (name == "rggb") return CfaPattern::Rggb;
  if (name == "bggr") return CfaPattern::Bggr;
  if (name == "gbrg") return CfaPattern::Gbrg;
  throw UsageError("unknown CFA pattern '" + name +
                   "' (expected grbg, rggb, bggr, or gbrg)");
}

}  // namespace chroma
