// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "chroma/plane.hpp"
#include "chroma/subsampling.hpp"
#include "chroma/upsampling.hpp"

namespace chroma {

// Side information signaled from server to client: the chroma subsampling
// class and the preferred upsampling process, packed into four bits
// m1 m2 m3 m4 (m1 most significant). The first two bits carry the class
// (TopLeft=00, Left=01, Mid=10, Right=11), the last two the upsampler
// (Copy=00, Bili=01, Nedi=10, Bicu=11).
struct SideInfoWord {
  std::uint8_t bits = 0;  // m1..m4 in bits 3..0

  ChromaClass chroma_class() const {
    return static_cast<ChromaClass>((bits >> 2) & 3);
  }
  UpsamplerKind upsampler() const {
    return static_cast<UpsamplerKind>(bits & 3);
  }

  bool operator==(const SideInfoWord&) const = default;
};

SideInfoWord encode_side_info(ChromaClass cls, UpsamplerKind upsampler);

// A (7,4)-Hamming codeword p1..p7 protecting a SideInfoWord against one
// flipped bit. Wire format: one byte with p1 in bit 6, p7 in bit 0, and
// the byte's most significant bit zero.
struct HammingWord {
  std::uint8_t bits = 0;

  std::uint8_t to_byte() const { return bits; }
  static HammingWord from_byte(std::uint8_t byte);

  bool operator==(const HammingWord&) const = default;
};

// Encodes with the standard even-parity (7,4) construction: parity bits at
// p1, p2, p4; message bits at (p3, p5, p6, p7) = (m4, m3, m2, m1). The
// 16-entry codebook this produces is embedded as data and checked against
// the construction on first use.
HammingWord hamming_encode(SideInfoWord word);

// Codeword for each 4-bit message 0..15.
const std::array<std::uint8_t, 16>& hamming_codebook();

struct HammingDecodeResult {
  SideInfoWord word;
  // 1-based position of the corrected bit, absent when the syndrome is
  // zero. Two or more flipped bits decode to a wrong but valid codeword;
  // that limit is inherent to the code.
  std::optional<int> corrected_position;
};

HammingDecodeResult hamming_decode(HammingWord received);

// Offset, in full-resolution pixels, between where a subsampled chroma
// value truly sits and the even-coordinate anchor it is stored at.
struct Displacement {
  double drow = 0.0, dcol = 0.0;
};

// TopLeft -> (0,0); Left -> (0.5,0); Mid -> (0.5,0.5); Right -> (0.5,1.0).
Displacement displacement_of(ChromaClass cls);

// A coordinate-inconsistency error actually materializes only when a
// displaced class meets an interpolating upsampler: nine combinations in
// {Left, Mid, Right} x {Bili, Nedi, Bicu}. Copy reconstructions and all
// TopLeft combinations are unaffected.
bool has_true_ci(ChromaClass cls, UpsamplerKind upsampler);

// Undoes the translation a displaced class introduces: the upsampled plane
// holds values whose true location is (r + drow, c + dcol), so the
// corrected plane is V(r, c) = sample_bilinear(upsampled, r - drow,
// c - dcol), clamped at the borders. Identity for the seven combinations
// without a true coordinate inconsistency.
Plane reinterpolate(const Plane& upsampled, ChromaClass cls,
                    UpsamplerKind upsampler);

}  // namespace chroma
