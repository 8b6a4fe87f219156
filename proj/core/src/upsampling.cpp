// SPDX-License-Identifier: Apache-2.0
#include "chroma/upsampling.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "chroma/sampling.hpp"

namespace chroma {

namespace {

constexpr double kNediDetEpsilon = 1e-10;
constexpr double kNediWeightLimit = 2.0;

struct Offset {
  int dr, dc;
};

// Gaussian elimination with partial pivoting on the 4x4 normal equations.
// Returns false when the pivot product signals a (near-)singular system.
bool solve_normal_equations(double a[4][4], double b[4], double w[4]) {
  double det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (pivot != col) {
      for (int k = 0; k < 4; ++k) std::swap(a[col][k], a[pivot][k]);
      std::swap(b[col], b[pivot]);
      det = -det;
    }
    det *= a[col][col];
    if (std::abs(a[col][col]) < 1e-300) return false;
    for (int r = col + 1; r < 4; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  if (std::abs(det) < kNediDetEpsilon) return false;
  for (int r = 3; r >= 0; --r) {
    double acc = b[r];
    for (int k = r + 1; k < 4; ++k) acc -= a[r][k] * w[k];
    w[r] = acc / a[r][r];
  }
  return true;
}

// One least-squares prediction at (r, c) on the partially filled doubled
// grid. `pred` holds the four unit-distance neighbor offsets; training
// samples sit at `train` offsets from the target and regress on their own
// neighbors at 2x the prediction offsets (the lattice one scale up).
// Returns false when the window leaves the grid or the system is rejected.
bool nedi_predict(const Plane& hr, int r, int c,
                  const std::array<Offset, 4>& pred,
                  const std::array<Offset, 16>& train, double& out) {
  for (const Offset& t : train) {
    const int tr = r + t.dr, tc = c + t.dc;
    if (tr - 2 < 0 || tr + 2 >= hr.height() || tc - 2 < 0 ||
        tc + 2 >= hr.width()) {
      return false;
    }
  }

  double ata[4][4] = {};
  double atb[4] = {};
  double scale = 0.0;
  for (const Offset& t : train) {
    const int tr = r + t.dr, tc = c + t.dc;
    double x[4];
    for (int k = 0; k < 4; ++k) {
      x[k] = hr.at(tr + 2 * pred[k].dr, tc + 2 * pred[k].dc);
      scale = std::max(scale, std::abs(x[k]));
    }
    const double y = hr.at(tr, tc);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) ata[i][j] += x[i] * x[j];
      atb[i] += x[i] * y;
    }
  }
  if (scale < 1e-12) return false;

  // Scale-normalize so the singularity test behaves the same at any sample
  // magnitude; dividing both sides by scale^2 leaves the solution intact.
  const double inv2 = 1.0 / (scale * scale);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) ata[i][j] *= inv2;
    atb[i] *= inv2;
  }

  double w[4];
  if (!solve_normal_equations(ata, atb, w)) return false;
  for (int k = 0; k < 4; ++k) {
    if (std::abs(w[k]) > kNediWeightLimit) return false;
  }

  double acc = 0.0;
  for (int k = 0; k < 4; ++k) {
    acc += w[k] * hr.at(r + pred[k].dr, c + pred[k].dc);
  }
  out = acc;
  return true;
}

// Training windows: 16 known samples forming a 4x4 block of the lattice
// the pass interpolates from, centered on the target.
std::array<Offset, 16> diagonal_training_window() {
  std::array<Offset, 16> out;
  int n = 0;
  for (int a = -3; a <= 3; a += 2) {
    for (int b = -3; b <= 3; b += 2) out[n++] = {a, b};
  }
  return out;
}

std::array<Offset, 16> rotated_training_window() {
  // The same 4x4 block expressed on the 45-degree-rotated lattice:
  // offsets ((a+b)/2, (a-b)/2) with a, b odd in [-3, 3].
  std::array<Offset, 16> out;
  int n = 0;
  for (int a = -3; a <= 3; a += 2) {
    for (int b = -3; b <= 3; b += 2) out[n++] = {(a + b) / 2, (a - b) / 2};
  }
  return out;
}

}  // namespace

Plane nedi_upscale(const Plane& quarter) {
  const int qw = quarter.width(), qh = quarter.height();
  const int w = 2 * qw, h = 2 * qh;
  Plane hr(w, h);

  for (int i = 0; i < qh; ++i) {
    for (int j = 0; j < qw; ++j) {
      hr.at(2 * i, 2 * j) = quarter.at(i, j);
    }
  }

  const bool trainable = qw >= 4 && qh >= 4;
  static const std::array<Offset, 4> kDiagonal = {
      Offset{-1, -1}, Offset{-1, 1}, Offset{1, -1}, Offset{1, 1}};
  static const std::array<Offset, 4> kAxial = {
      Offset{-1, 0}, Offset{1, 0}, Offset{0, -1}, Offset{0, 1}};
  static const std::array<Offset, 16> kDiagWindow = diagonal_training_window();
  static const std::array<Offset, 16> kRotWindow = rotated_training_window();

  // Pass 1: odd/odd pixels from diagonal neighbors (the placed samples).
  for (int r = 1; r < h; r += 2) {
    for (int c = 1; c < w; c += 2) {
      double v;
      if (!trainable || !nedi_predict(hr, r, c, kDiagonal, kDiagWindow, v)) {
        v = sample_bilinear(quarter, r / 2.0, c / 2.0);
      }
      hr.at(r, c) = v;
    }
  }

  // Pass 2: pixels with odd coordinate sum; their axial neighbors all lie
  // on the lattice completed by pass 1.
  for (int r = 0; r < h; ++r) {
    for (int c = (r % 2 == 0) ? 1 : 0; c < w; c += 2) {
      double v;
      if (!trainable || !nedi_predict(hr, r, c, kAxial, kRotWindow, v)) {
        v = sample_bilinear(quarter, r / 2.0, c / 2.0);
      }
      hr.at(r, c) = v;
    }
  }
  return hr;
}

Plane upsample(const Plane& quarter, UpsamplerKind kind, int out_width,
               int out_height) {
  if (out_width != 2 * quarter.width() || out_height != 2 * quarter.height()) {
    throw DimensionError(
        "upsample: output must be exactly twice the input, got " +
        std::to_string(out_width) + "x" + std::to_string(out_height) +
        " from " + std::to_string(quarter.width()) + "x" +
        std::to_string(quarter.height()));
  }

  if (kind == UpsamplerKind::Nedi) return nedi_upscale(quarter);

  Plane out(out_width, out_height);
  for (int r = 0; r < out_height; ++r) {
    for (int c = 0; c < out_width; ++c) {
      switch (kind) {
        case UpsamplerKind::Copy:
          out.at(r, c) = quarter.at(r / 2, c / 2);
          break;
        case UpsamplerKind::Bili:
          out.at(r, c) = sample_bilinear(quarter, r / 2.0, c / 2.0);
          break;
        case UpsamplerKind::Bicu:
          out.at(r, c) = sample_bicubic(quarter, r / 2.0, c / 2.0);
          break;
        case UpsamplerKind::Nedi:
          break;  // handled above
      }
    }
  }
  return out;
}

const char* upsampler_name(UpsamplerKind kind) {
  switch (kind) {
    case UpsamplerKind::Copy: return "copy";
    case UpsamplerKind::Bili: return "bili";
    case UpsamplerKind::Nedi: return "nedi";
    case UpsamplerKind::Bicu: return "bicu";
  }
  return "?";
}

UpsamplerKind parse_upsampler(const std::string& name) {
  if (name == "copy") return UpsamplerKind::Copy;
  if (name == "bili") return UpsamplerKind::Bili;
  if (name == "nedi") return UpsamplerKind::Nedi;
  if (name == "bicu") return UpsamplerKind::Bicu;
  throw UsageError("unknown upsampler '" + name +
                   "' (expected copy, bili, nedi, or bicu)");
}

}  // namespace chroma
