// SPDX-License-Identifier: Apache-2.0
#include "chroma/testset.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "chroma/colorspace.hpp"
#include "chroma/pnm.hpp"

namespace chroma {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double hash01(std::uint64_t seed, std::int64_t ix, std::int64_t iy) {
  const std::uint64_t h = splitmix64(
      seed ^ (static_cast<std::uint64_t>(ix) * 0x9e3779b97f4a7c15ULL) ^
      (static_cast<std::uint64_t>(iy) * 0xc2b2ae3d27d4eb4fULL));
  return static_cast<double>(h >> 11) * (1.0 / 9007199254740992.0);
}

double smoothstep(double t) { return t * t * (3.0 - 2.0 * t); }

// Smoothly interpolated lattice noise in [0, 1].
double value_noise(std::uint64_t seed, double x, double y) {
  const double fx = std::floor(x), fy = std::floor(y);
  const auto ix = static_cast<std::int64_t>(fx);
  const auto iy = static_cast<std::int64_t>(fy);
  const double tx = smoothstep(x - fx);
  const double ty = smoothstep(y - fy);
  const double v00 = hash01(seed, ix, iy);
  const double v01 = hash01(seed, ix + 1, iy);
  const double v10 = hash01(seed, ix, iy + 1);
  const double v11 = hash01(seed, ix + 1, iy + 1);
  const double a = v00 + (v01 - v00) * tx;
  const double b = v10 + (v11 - v10) * tx;
  return a + (b - a) * ty;
}

// Four octaves starting at the given wavelength, amplitudes halving.
double fractal_noise(std::uint64_t seed, double x, double y,
                     double wavelength) {
  double acc = 0.0, amp = 1.0, norm = 0.0;
  for (int octave = 0; octave < 4; ++octave) {
    acc += amp * value_noise(seed + octave * 1013, x / wavelength,
                             y / wavelength);
    norm += amp;
    amp *= 0.55;
    wavelength *= 0.5;
  }
  return acc / norm;
}

struct Rgb {
  double r, g, b;
};

// Saturated anchor colors the noise fields blend between.
constexpr std::array<Rgb, 10> kAnchors = {{
    {214.0, 72.0, 54.0},
    {46.0, 122.0, 196.0},
    {240.0, 200.0, 80.0},
    {58.0, 168.0, 96.0},
    {182.0, 70.0, 180.0},
    {236.0, 140.0, 52.0},
    {40.0, 196.0, 188.0},
    {120.0, 88.0, 40.0},
    {226.0, 226.0, 214.0},
    {34.0, 40.0, 70.0},
}};

}  // namespace

RgbImage make_test_image(int index, int width, int height) {
  const std::uint64_t seed = splitmix64(0x5eed0000ULL + index);
  RgbImage image{Plane(width, height), Plane(width, height),
                 Plane(width, height)};

  // Per-image palette: three anchors blended by two noise fields.
  const Rgb pal_a = kAnchors[splitmix64(seed ^ 1) % kAnchors.size()];
  const Rgb pal_b = kAnchors[splitmix64(seed ^ 2) % kAnchors.size()];
  const Rgb pal_c = kAnchors[splitmix64(seed ^ 3) % kAnchors.size()];

  const double base_wavelength = 0.22 * std::min(width, height);

  // A few soft-edged disks in further palette colors.
  struct Disk {
    double cx, cy, radius, feather;
    Rgb color;
  };
  std::vector<Disk> disks;
  const int disk_count = 3 + static_cast<int>(splitmix64(seed ^ 4) % 3);
  for (int d = 0; d < disk_count; ++d) {
    const std::uint64_t ds = splitmix64(seed ^ (0x100 + d));
    Disk disk;
    disk.cx = hash01(ds, 1, 0) * width;
    disk.cy = hash01(ds, 2, 0) * height;
    disk.radius = (0.08 + 0.18 * hash01(ds, 3, 0)) * std::min(width, height);
    disk.feather = 1.0 + 2.5 * hash01(ds, 4, 0);
    disk.color = kAnchors[splitmix64(ds) % kAnchors.size()];
    disks.push_back(disk);
  }

  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const double x = c, y = r;
      const double n1 = fractal_noise(seed ^ 0xAAA, x, y, base_wavelength);
      const double n2 = fractal_noise(seed ^ 0xBBB, x, y, base_wavelength);
      const double n3 =
          fractal_noise(seed ^ 0xCCC, x, y, 0.4 * base_wavelength);

      // Blend the palette by the two large-scale fields, then modulate
      // brightness with the finer one.
      const double wa = n1 * n1;
      const double wb = (1.0 - n1) * (1.0 - n1);
      const double wc = 2.0 * n1 * (1.0 - n1);
      const double inv = 1.0 / (wa + wb + wc);
      double red = (wa * pal_a.r + wb * pal_b.r + wc * pal_c.r) * inv;
      double green = (wa * pal_a.g + wb * pal_b.g + wc * pal_c.g) * inv;
      double blue = (wa * pal_a.b + wb * pal_b.b + wc * pal_c.b) * inv;

      const double shade = 0.55 + 0.45 * n2;
      const double texture = 0.85 + 0.3 * n3;
      red *= shade * texture;
      green *= shade * texture;
      blue *= shade * texture;

      for (const Disk& disk : disks) {
        const double dist =
            std::hypot(x - disk.cx, y - disk.cy) - disk.radius;
        const double t =
            std::clamp(0.5 - dist / disk.feather, 0.0, 1.0);
        const double cover = smoothstep(t) * 0.85;
        red += (disk.color.r * shade - red) * cover;
        green += (disk.color.g * shade - green) * cover;
        blue += (disk.color.b * shade - blue) * cover;
      }

      image.r.at(r, c) = quantize8(red);
      image.g.at(r, c) = quantize8(green);
      image.b.at(r, c) = quantize8(blue);
    }
  }
  return image;
}

std::vector<std::filesystem::path> write_testset(
    const std::filesystem::path& dir, int count, int width, int height) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (int i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "synth%02d.ppm", i);
    const std::filesystem::path path = dir / name;
    write_ppm(make_test_image(i, width, height), path);
    written.push_back(path);
  }
  return written;
}

}  // namespace chroma
