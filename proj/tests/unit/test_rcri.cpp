// SPDX-License-Identifier: Apache-2.0
#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "chroma/rcri.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace chroma;
using testutil::plane_from;

namespace {

const ChromaClass kClasses[] = {ChromaClass::TopLeft, ChromaClass::Left,
                                ChromaClass::Mid, ChromaClass::Right};
const UpsamplerKind kUpsamplers[] = {UpsamplerKind::Copy, UpsamplerKind::Bili,
                                     UpsamplerKind::Nedi, UpsamplerKind::Bicu};

}  // namespace

TEST_CASE("side info packing") {
  CHECK(encode_side_info(ChromaClass::TopLeft, UpsamplerKind::Bicu).bits ==
        0b0011);
  CHECK(encode_side_info(ChromaClass::TopLeft, UpsamplerKind::Copy).bits ==
        0b0000);
  CHECK(encode_side_info(ChromaClass::Right, UpsamplerKind::Bicu).bits ==
        0b1111);

  // bits <-> (class, upsampler) is a bijection over the 16 pairs
  std::set<std::uint8_t> seen;
  for (ChromaClass cls : kClasses) {
    for (UpsamplerKind up : kUpsamplers) {
      const SideInfoWord w = encode_side_info(cls, up);
      CHECK(w.chroma_class() == cls);
      CHECK(w.upsampler() == up);
      seen.insert(w.bits);
    }
  }
  CHECK(seen.size() == 16);
}

TEST_CASE("hamming encoding worked values") {
  CHECK(hamming_encode({0b0001}).bits == 0b1110000);
  CHECK(hamming_encode({0b1000}).bits == 0b1101001);
  CHECK(hamming_encode({0b1111}).bits == 0b1111111);
}

TEST_CASE("the construction regenerates the embedded codebook") {
  const auto& table = hamming_codebook();
  CHECK(table.size() == 16);
  for (int m = 0; m < 16; ++m) {
    CHECK(hamming_encode({static_cast<std::uint8_t>(m)}).bits == table[m]);
  }
}

TEST_CASE("decoding the corrupted worked example") {
  const HammingDecodeResult r = hamming_decode({0b1100000});
  CHECK(r.word.bits == 0b0001);
  CHECK(r.word.chroma_class() == ChromaClass::TopLeft);
  CHECK(r.word.upsampler() == UpsamplerKind::Bili);
  REQUIRE(r.corrected_position.has_value());
  CHECK(*r.corrected_position == 3);
}

TEST_CASE("clean codewords decode without correction") {
  const HammingDecodeResult zero = hamming_decode({0b0000000});
  CHECK(zero.word.bits == 0);
  CHECK(!zero.corrected_position.has_value());

  const HammingDecodeResult last = hamming_decode({0b1111110});
  CHECK(last.word.bits == 0b1111);
  REQUIRE(last.corrected_position.has_value());
  CHECK(*last.corrected_position == 7);
}

TEST_CASE("exhaustive single-error correction") {
  for (int m = 0; m < 16; ++m) {
    const HammingWord clean = hamming_encode({static_cast<std::uint8_t>(m)});

    const HammingDecodeResult direct = hamming_decode(clean);
    CHECK(direct.word.bits == m);
    CHECK(!direct.corrected_position.has_value());

    for (int pos = 1; pos <= 7; ++pos) {
      HammingWord corrupted = clean;
      corrupted.bits ^= static_cast<std::uint8_t>(1 << (7 - pos));
      const HammingDecodeResult fixed = hamming_decode(corrupted);
      CHECK(fixed.word.bits == m);
      REQUIRE(fixed.corrected_position.has_value());
      CHECK(*fixed.corrected_position == pos);
    }
  }
}

TEST_CASE("minimum pairwise distance is 3") {
  const auto& table = hamming_codebook();
  int min_distance = 7;
  for (int i = 0; i < 16; ++i) {
    for (int j = i + 1; j < 16; ++j) {
      min_distance =
          std::min(min_distance, std::popcount(
                                     static_cast<unsigned>(table[i] ^
                                                           table[j])));
    }
  }
  CHECK(min_distance == 3);
}

TEST_CASE("wire format puts p1 in bit 6 and keeps the top bit clear") {
  const HammingWord w = hamming_encode({0b0001});  // 1110000
  CHECK(w.to_byte() == 0x70);
  CHECK((w.to_byte() & 0x80) == 0);
  CHECK(HammingWord::from_byte(0x70) == w);
  CHECK_THROWS_AS(HammingWord::from_byte(0xF0), FormatError);
}

TEST_CASE("true coordinate inconsistency holds for exactly nine pairs") {
  int count = 0;
  for (ChromaClass cls : kClasses) {
    for (UpsamplerKind up : kUpsamplers) {
      const bool expected = cls != ChromaClass::TopLeft &&
                            up != UpsamplerKind::Copy;
      CHECK(has_true_ci(cls, up) == expected);
      count += has_true_ci(cls, up);
    }
  }
  CHECK(count == 9);
  CHECK_FALSE(has_true_ci(ChromaClass::Mid, UpsamplerKind::Copy));
  CHECK(has_true_ci(ChromaClass::Left, UpsamplerKind::Bili));
  CHECK_FALSE(has_true_ci(ChromaClass::TopLeft, UpsamplerKind::Bicu));
}

TEST_CASE("displacement table") {
  CHECK(displacement_of(ChromaClass::TopLeft).drow == 0.0);
  CHECK(displacement_of(ChromaClass::TopLeft).dcol == 0.0);
  CHECK(displacement_of(ChromaClass::Left).drow == 0.5);
  CHECK(displacement_of(ChromaClass::Left).dcol == 0.0);
  CHECK(displacement_of(ChromaClass::Mid).drow == 0.5);
  CHECK(displacement_of(ChromaClass::Mid).dcol == 0.5);
  CHECK(displacement_of(ChromaClass::Right).drow == 0.5);
  CHECK(displacement_of(ChromaClass::Right).dcol == 1.0);
}

TEST_CASE("reinterpolate is the identity without a true inconsistency") {
  std::mt19937_64 rng(31);
  const Plane u = testutil::random_plane(8, 8, rng);
  for (ChromaClass cls : kClasses) {
    for (UpsamplerKind up : kUpsamplers) {
      if (has_true_ci(cls, up)) continue;
      CHECK(reinterpolate(u, cls, up) == u);
    }
  }
}

TEST_CASE("reinterpolate shifts a deviated ramp back into place") {
  const Plane u = plane_from(8, 8, [](int r, int) { return r + 0.5; });
  const Plane v = reinterpolate(u, ChromaClass::Left, UpsamplerKind::Bili);
  for (int r = 1; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      CHECK(v.at(r, c) == doctest::Approx(double(r)).epsilon(1e-12));
    }
  }
}

TEST_CASE("subsample, upsample, reinterpolate recovers affine planes") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  const struct {
    SubsamplerKind sub;
    ChromaClass cls;
  } cases[] = {{SubsamplerKind::L, ChromaClass::Left},
               {SubsamplerKind::A, ChromaClass::Mid},
               {SubsamplerKind::R, ChromaClass::Right}};

  for (int trial = 0; trial < 5; ++trial) {
    const double a = coef(rng), b = coef(rng), g = 100.0 + 10.0 * coef(rng);
    const Plane p = plane_from(24, 22, [&](int r, int c) {
      return a * r + b * c + g;
    });
    for (const auto& [sub, cls] : cases) {
      const QuarterChroma q = subsample(p, p, sub);
      CHECK(q.producing_class == cls);
      for (UpsamplerKind up : {UpsamplerKind::Bili, UpsamplerKind::Bicu}) {
        const Plane u = upsample(q.cb, up, 24, 22);
        const Plane v = reinterpolate(u, cls, up);
        // Bicubic taps span 2 quarter pixels, so its exactness region is
        // 6 output pixels in; bilinear only loses the shifted-in border.
        const int margin = up == UpsamplerKind::Bicu ? 6 : 2;
        double worst = 0.0;
        for (int r = margin; r < v.height() - margin; ++r) {
          for (int c = margin; c < v.width() - margin; ++c) {
            worst = std::max(worst,
                             std::abs(v.at(r, c) - (a * r + b * c + g)));
          }
        }
        CHECK(worst < 1e-6);
      }
    }
  }
}
