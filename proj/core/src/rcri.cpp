// SPDX-License-Identifier: Apache-2.0
#include "chroma/rcri.hpp"

#include <stdexcept>

#include "chroma/sampling.hpp"

namespace chroma {

SideInfoWord encode_side_info(ChromaClass cls, UpsamplerKind upsampler) {
  return {static_cast<std::uint8_t>((static_cast<int>(cls) << 2) |
                                    static_cast<int>(upsampler))};
}

HammingWord HammingWord::from_byte(std::uint8_t byte) {
  if (byte & 0x80) {
    throw FormatError("side-information byte has its top bit set");
  }
  return {byte};
}

namespace {

// Message bits m1..m4 (m1 = bit 3 of the nibble) to codeword p1..p7
// (p1 = bit 6). Parity bits p1, p2, p4 cover the standard position sets
// {1,3,5,7}, {2,3,6,7}, {4,5,6,7} with even parity.
std::uint8_t encode_nibble(std::uint8_t m) {
  const int m1 = (m >> 3) & 1;
  const int m2 = (m >> 2) & 1;
  const int m3 = (m >> 1) & 1;
  const int m4 = m & 1;
  const int p3 = m4, p5 = m3, p6 = m2, p7 = m1;
  const int p1 = p3 ^ p5 ^ p7;
  const int p2 = p3 ^ p6 ^ p7;
  const int p4 = p5 ^ p6 ^ p7;
  return static_cast<std::uint8_t>((p1 << 6) | (p2 << 5) | (p3 << 4) |
                                   (p4 << 3) | (p5 << 2) | (p6 << 1) | p7);
}

// The sixteen codewords, indexed by message value.
constexpr std::array<std::uint8_t, 16> kCodebook = {
    0b0000000, 0b1110000, 0b1001100, 0b0111100,  // TopLeft row
    0b0101010, 0b1011010, 0b1100110, 0b0010110,  // Left row
    0b1101001, 0b0011001, 0b0100101, 0b1010101,  // Mid row
    0b1000011, 0b0110011, 0b0001111, 0b1111111,  // Right row
};

std::array<std::uint8_t, 16> build_checked_codebook() {
  std::array<std::uint8_t, 16> built{};
  for (int m = 0; m < 16; ++m) {
    built[m] = encode_nibble(static_cast<std::uint8_t>(m));
    if (built[m] != kCodebook[m]) {
      throw std::logic_error(
          "hamming construction disagrees with the embedded codebook");
    }
  }
  return built;
}

}  // namespace

const std::array<std::uint8_t, 16>& hamming_codebook() {
  static const std::array<std::uint8_t, 16> table = build_checked_codebook();
  return table;
}

HammingWord hamming_encode(SideInfoWord word) {
  return {hamming_codebook()[word.bits & 0x0F]};
}

HammingDecodeResult hamming_decode(HammingWord received) {
  std::uint8_t bits = received.bits & 0x7F;
  const auto p = [&](int k) { return (bits >> (7 - k)) & 1; };

  const int s1 = p(1) ^ p(3) ^ p(5) ^ p(7);
  const int s2 = p(2) ^ p(3) ^ p(6) ^ p(7);
  const int s4 = p(4) ^ p(5) ^ p(6) ^ p(7);
  const int position = (s4 << 2) | (s2 << 1) | s1;

  std::optional<int> corrected;
  if (position != 0) {
    bits ^= static_cast<std::uint8_t>(1 << (7 - position));
    corrected = position;
  }

  const std::uint8_t m = static_cast<std::uint8_t>(
      (p(7) << 3) | (p(6) << 2) | (p(5) << 1) | p(3));
  return {SideInfoWord{m}, corrected};
}

Displacement displacement_of(ChromaClass cls) {
  const RasterOffset off = block_offset(cls);
  return {off.row, off.col};
}

bool has_true_ci(ChromaClass cls, UpsamplerKind upsampler) {
  return cls != ChromaClass::TopLeft && upsampler != UpsamplerKind::Copy;
}

Plane reinterpolate(const Plane& upsampled, ChromaClass cls,
                    UpsamplerKind upsampler) {
  if (!has_true_ci(cls, upsampler)) return upsampled;

  const Displacement d = displacement_of(cls);
  Plane out(upsampled.width(), upsampled.height());
  for (int r = 0; r < out.height(); ++r) {
    for (int c = 0; c < out.width(); ++c) {
      out.at(r, c) = sample_bilinear(upsampled, r - d.drow, c - d.dcol);
    }
  }
  return out;
}

}  // namespace chroma
