// SPDX-License-Identifier: Apache-2.0
#include "chroma/colorspace.hpp"

#include <algorithm>
#include <cmath>

namespace chroma {

YcbcrImage rgb_to_ycbcr(const RgbImage& image) {
  require_same_size(image, "rgb_to_ycbcr");
  const int w = image.width(), h = image.height();
  YcbcrImage out{Plane(w, h), Plane(w, h), Plane(w, h)};
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const double R = image.r.at(r, c);
      const double G = image.g.at(r, c);
      const double B = image.b.at(r, c);
      out.y.at(r, c) = 0.257 * R + 0.504 * G + 0.098 * B + 16.0;
      // 0.148 + 0.291 = 0.439 and 0.368 + 0.071 = 0.439, so the rows
      // rewrite exactly as differences; R=G=B then yields 128 with no
      // floating-point residue.
      out.cb.at(r, c) = -0.148 * (R - B) - 0.291 * (G - B) + 128.0;
      out.cr.at(r, c) = 0.439 * (R - G) - 0.071 * (B - G) + 128.0;
    }
  }
  return out;
}

RgbImage ycbcr_to_rgb(const YcbcrImage& image) {
  require_same_size(image, "ycbcr_to_rgb");
  const int w = image.width(), h = image.height();
  RgbImage out{Plane(w, h), Plane(w, h), Plane(w, h)};
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const double y = image.y.at(r, c) - 16.0;
      const double cb = image.cb.at(r, c) - 128.0;
      const double cr = image.cr.at(r, c) - 128.0;
      out.r.at(r, c) = std::clamp(1.164 * y + 1.596 * cr, 0.0, 255.0);
      out.g.at(r, c) =
          std::clamp(1.164 * y - 0.391 * cb - 0.813 * cr, 0.0, 255.0);
      out.b.at(r, c) = std::clamp(1.164 * y + 2.018 * cb, 0.0, 255.0);
    }
  }
  return out;
}

double quantize8(double sample) {
  return std::clamp(std::round(sample), 0.0, 255.0);
}

Plane quantize8(const Plane& plane) {
  Plane out = plane;
  for (double& v : out.samples()) {
    v = quantize8(v);
  }
  return out;
}

Ycbcr8Image quantize_ycbcr(const YcbcrImage& image) {
  return {quantize8(image.y), quantize8(image.cb), quantize8(image.cr)};
}

}  // namespace chroma
