// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <variant>

#include "chroma/plane.hpp"

namespace chroma {

// Binary portable pixmap (P6) and graymap (P5) I/O, 8-bit maxval 255 only.
// Deeper files raise FormatError; malformed headers raise ParseError with
// the offending byte offset. Samples are quantized (round, clip to
// [0, 255]) on write, so write-then-read is exact for 8-bit content.

RgbImage read_ppm(const std::filesystem::path& path);
Plane read_pgm(const std::filesystem::path& path);

// Dispatches on the magic number: P6 -> RgbImage, P5 -> Plane.
std::variant<RgbImage, Plane> read_image(const std::filesystem::path& path);

void write_ppm(const RgbImage& image, const std::filesystem::path& path);
void write_pgm(const Plane& plane, const std::filesystem::path& path);

}  // namespace chroma
