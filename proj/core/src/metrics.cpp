// SPDX-License-Identifier: Apache-2.0
#include "chroma/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace chroma {

namespace {

constexpr double kPeak = 255.0;

void require_pair(const Plane& a, const Plane& b, const char* what) {
  if (!a.same_size(b)) {
    throw DimensionError(std::string(what) + ": plane dimensions disagree");
  }
}

double sum_squared_diff(const Plane& a, const Plane& b) {
  double acc = 0.0;
  const auto sa = a.samples(), sb = b.samples();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const double d = sa[i] - sb[i];
    acc += d * d;
  }
  return acc;
}

double db_from_mse(double mse) {
  if (mse <= 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(kPeak * kPeak / mse);
}

constexpr int kSsimWindow = 11;
constexpr int kSsimRadius = kSsimWindow / 2;
constexpr double kSsimSigma = 1.5;
constexpr double kSsimK1 = 0.01;
constexpr double kSsimK2 = 0.03;

const std::array<double, kSsimWindow>& gaussian_kernel() {
  static const std::array<double, kSsimWindow> kernel = [] {
    std::array<double, kSsimWindow> k{};
    double sum = 0.0;
    for (int i = 0; i < kSsimWindow; ++i) {
      const double d = i - kSsimRadius;
      k[i] = std::exp(-0.5 * d * d / (kSsimSigma * kSsimSigma));
      sum += k[i];
    }
    for (double& v : k) v /= sum;
    return k;
  }();
  return kernel;
}

// Valid-mode separable Gaussian blur: output is (h-10) x (w-10).
Plane blur_valid(const Plane& src) {
  const auto& k = gaussian_kernel();
  const int w = src.width(), h = src.height();
  const int ow = w - 2 * kSsimRadius, oh = h - 2 * kSsimRadius;

  Plane horz(ow, h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < ow; ++c) {
      double acc = 0.0;
      for (int t = 0; t < kSsimWindow; ++t) acc += k[t] * src.at(r, c + t);
      horz.at(r, c) = acc;
    }
  }
  Plane out(ow, oh);
  for (int r = 0; r < oh; ++r) {
    for (int c = 0; c < ow; ++c) {
      double acc = 0.0;
      for (int t = 0; t < kSsimWindow; ++t) acc += k[t] * horz.at(r + t, c);
      out.at(r, c) = acc;
    }
  }
  return out;
}

Plane hadamard(const Plane& a, const Plane& b) {
  Plane out = a;
  auto oa = out.samples();
  const auto sb = b.samples();
  for (std::size_t i = 0; i < oa.size(); ++i) oa[i] *= sb[i];
  return out;
}

}  // namespace

double cpsnr(const RgbImage& reference, const RgbImage& test) {
  require_same_size(reference, "cpsnr");
  require_same_size(test, "cpsnr");
  require_pair(reference.r, test.r, "cpsnr");
  const double n =
      3.0 * reference.width() * reference.height();
  const double cmse = (sum_squared_diff(reference.r, test.r) +
                       sum_squared_diff(reference.g, test.g) +
                       sum_squared_diff(reference.b, test.b)) /
                      n;
  return db_from_mse(cmse);
}

double psnr(const Plane& reference, const Plane& test) {
  require_pair(reference, test, "psnr");
  const double n = static_cast<double>(reference.width()) * reference.height();
  return db_from_mse(sum_squared_diff(reference, test) / n);
}

double ssim(const Plane& reference, const Plane& test) {
  require_pair(reference, test, "ssim");
  if (reference.width() < kSsimWindow || reference.height() < kSsimWindow) {
    throw DimensionError("ssim: planes must be at least 11x11");
  }

  const double c1 = (kSsimK1 * kPeak) * (kSsimK1 * kPeak);
  const double c2 = (kSsimK2 * kPeak) * (kSsimK2 * kPeak);

  const Plane mu_x = blur_valid(reference);
  const Plane mu_y = blur_valid(test);
  const Plane xx = blur_valid(hadamard(reference, reference));
  const Plane yy = blur_valid(hadamard(test, test));
  const Plane xy = blur_valid(hadamard(reference, test));

  double acc = 0.0;
  const int ow = mu_x.width(), oh = mu_x.height();
  for (int r = 0; r < oh; ++r) {
    for (int c = 0; c < ow; ++c) {
      const double mx = mu_x.at(r, c), my = mu_y.at(r, c);
      const double vx = xx.at(r, c) - mx * mx;
      const double vy = yy.at(r, c) - my * my;
      const double cov = xy.at(r, c) - mx * my;
      const double num = (2.0 * mx * my + c1) * (2.0 * cov + c2);
      const double den = (mx * mx + my * my + c1) * (vx + vy + c2);
      acc += num / den;
    }
  }
  return acc / (static_cast<double>(ow) * oh);
}

double ssimc(const RgbImage& reference, const RgbImage& test) {
  return (ssim(reference.r, test.r) + ssim(reference.g, test.g) +
          ssim(reference.b, test.b)) /
         3.0;
}

}  // namespace chroma
