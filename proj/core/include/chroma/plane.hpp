// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chroma/errors.hpp"

namespace chroma {

// A width x height grid of real-valued samples in row-major order
// (row index r downward, column index c rightward). The shared carrier
// for Y, Cb, Cr, Bayer and R/G/B channel data. Samples are doubles;
// quantization to 8 bits happens only at explicit boundaries (file I/O,
// the simulated codec entry).
class Plane {
public:
  Plane() = default;
  Plane(int width, int height, double fill = 0.0);

  int width() const { return width_; }
  int height() const { return height_; }

  double at(int r, int c) const { return samples_[idx(r, c)]; }
  double& at(int r, int c) { return samples_[idx(r, c)]; }

  std::span<const double> samples() const { return samples_; }
  std::span<double> samples() { return samples_; }

  bool same_size(const Plane& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }
  bool has_even_dimensions() const {
    return width_ % 2 == 0 && height_ % 2 == 0;
  }

  // Throws FormatError if any sample is NaN or infinite.
  void require_finite() const;

  bool operator==(const Plane&) const = default;

private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * width_ + c;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> samples_;
};

// Three same-sized planes holding R, G, B. Sample range [0, 255] at I/O
// boundaries; intermediate values may be fractional.
struct RgbImage {
  Plane r, g, b;

  int width() const { return r.width(); }
  int height() const { return r.height(); }
};

// Three same-sized planes holding Y, Cb, Cr in real precision.
struct YcbcrImage {
  Plane y, cb, cr;

  int width() const { return y.width(); }
  int height() const { return y.height(); }
};

// Throws DimensionError unless all planes of the image share dimensions.
void require_same_size(const RgbImage& image, const char* what);
void require_same_size(const YcbcrImage& image, const char* what);

}  // namespace chroma
