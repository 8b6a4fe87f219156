// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "chroma/plane.hpp"

namespace chroma {

// Deterministic synthetic evaluation images: multi-octave value noise
// shaped by a per-image palette, plus a few soft-edged color shapes, so
// both luma and chroma carry structure at several scales. index selects
// palette and layout; the same (index, width, height) always produces the
// same image. Samples are 8-bit integers.
RgbImage make_test_image(int index, int width, int height);

// Writes `count` images (synth00.ppm, synth01.ppm, ...) into dir,
// creating it if needed. Returns the written paths, sorted.
std::vector<std::filesystem::path> write_testset(
    const std::filesystem::path& dir, int count, int width, int height);

}  // namespace chroma
