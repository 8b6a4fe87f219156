// SPDX-License-Identifier: Apache-2.0
#include "chroma/plane.hpp"

#include <cmath>
#include <string>

namespace chroma {

Plane::Plane(int width, int height, double fill)
    : width_(width), height_(height) {
  if (width < 2 || height < 2) {
    throw DimensionError("plane dimensions must be at least 2x2, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
  samples_.assign(static_cast<std::size_t>(width) * height, fill);
}

void Plane::require_finite() const {
  for (double v : samples_) {
    if (!std::isfinite(v)) {
      throw FormatError("plane contains a non-finite sample");
    }
  }
}

namespace {

void check_pair(const Plane& a, const Plane& b, const char* what) {
  if (!a.same_size(b)) {
    throw DimensionError(std::string(what) + ": plane dimensions disagree");
  }
}

}  // namespace

void require_same_size(const RgbImage& image, const char* what) {
  check_pair(image.r, image.g, what);
  check_pair(image.r, image.b, what);
}

void require_same_size(const YcbcrImage& image, const char* what) {
  check_pair(image.y, image.cb, what);
  check_pair(image.y, image.cr, what);
}

}  // namespace chroma
