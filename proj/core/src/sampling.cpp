// SPDX-License-Identifier: Apache-2.0
#include "chroma/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace chroma {

namespace {

double clamp_coord(double v, int n) {
  return std::clamp(v, 0.0, static_cast<double>(n - 1));
}

int clamp_index(int i, int n) { return std::clamp(i, 0, n - 1); }

}  // namespace

double sample_bilinear(const Plane& plane, double r, double c) {
  r = clamp_coord(r, plane.height());
  c = clamp_coord(c, plane.width());

  const int r0 = static_cast<int>(std::floor(r));
  const int c0 = static_cast<int>(std::floor(c));
  const int r1 = clamp_index(r0 + 1, plane.height());
  const int c1 = clamp_index(c0 + 1, plane.width());
  const double fr = r - r0;
  const double fc = c - c0;

  const double top = plane.at(r0, c0) * (1.0 - fc) + plane.at(r0, c1) * fc;
  const double bot = plane.at(r1, c0) * (1.0 - fc) + plane.at(r1, c1) * fc;
  return top * (1.0 - fr) + bot * fr;
}

namespace {

// Catmull-Rom tap weights for fractional offset t in [0, 1); taps sit at
// integer offsets -1, 0, 1, 2 from the base sample. Weights sum to 1.
void catmull_rom_weights(double t, double w[4]) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  w[0] = -0.5 * t3 + t2 - 0.5 * t;
  w[1] = 1.5 * t3 - 2.5 * t2 + 1.0;
  w[2] = -1.5 * t3 + 2.0 * t2 + 0.5 * t;
  w[3] = 0.5 * t3 - 0.5 * t2;
}

}  // namespace

double sample_bicubic(const Plane& plane, double r, double c) {
  r = clamp_coord(r, plane.height());
  c = clamp_coord(c, plane.width());

  const int r0 = static_cast<int>(std::floor(r));
  const int c0 = static_cast<int>(std::floor(c));
  double wr[4], wc[4];
  catmull_rom_weights(r - r0, wr);
  catmull_rom_weights(c - c0, wc);

  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    const int rr = clamp_index(r0 - 1 + i, plane.height());
    double row = 0.0;
    for (int j = 0; j < 4; ++j) {
      const int cc = clamp_index(c0 - 1 + j, plane.width());
      row += wc[j] * plane.at(rr, cc);
    }
    acc += wr[i] * row;
  }
  return acc;
}

}  // namespace chroma
