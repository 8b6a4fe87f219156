// SPDX-License-Identifier: Apache-2.0
#include "chroma/pnm.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace chroma {

namespace {

struct Parser {
  std::vector<unsigned char> data;
  std::size_t pos = 0;

  bool eof() const { return pos >= data.size(); }
  unsigned char peek() const { return data[pos]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos);
  }

  // PNM whitespace: blanks, TAB, CR, LF; '#' starts a comment to end of line.
  void skip_space_and_comments() {
    while (!eof()) {
      const unsigned char ch = peek();
      if (ch == '#') {
        while (!eof() && peek() != '\n') ++pos;
      } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        ++pos;
      } else {
        return;
      }
    }
  }

  int parse_uint(const char* field) {
    skip_space_and_comments();
    if (eof() || peek() < '0' || peek() > '9') {
      fail(std::string("expected unsigned integer for ") + field);
    }
    long value = 0;
    while (!eof() && peek() >= '0' && peek() <= '9') {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000L) fail(std::string(field) + " out of range");
      ++pos;
    }
    return static_cast<int>(value);
  }
};

Parser load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  Parser p;
  p.data.assign(std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("read failure on " + path.string());
  }
  return p;
}

// Parses the header shared by P5/P6 and leaves pos at the first raster byte.
void parse_header(Parser& p, char expected_kind, int& width, int& height) {
  if (p.data.size() < 2 || p.data[0] != 'P') p.fail("missing PNM magic");
  const char kind = static_cast<char>(p.data[1]);
  if (kind != expected_kind) {
    p.pos = 1;
    p.fail(std::string("expected P") + expected_kind + " magic, found P" +
           kind);
  }
  p.pos = 2;
  width = p.parse_uint("width");
  height = p.parse_uint("height");
  const int maxval = p.parse_uint("maxval");
  if (width < 1 || height < 1) p.fail("image dimensions must be positive");
  if (maxval > 255) {
    throw FormatError("unsupported sample depth: maxval " +
                      std::to_string(maxval) + " exceeds 255");
  }
  if (maxval < 1) p.fail("maxval must be positive");
  // Exactly one whitespace byte separates the header from the raster.
  if (p.eof()) p.fail("missing raster data");
  const unsigned char sep = p.peek();
  if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n') {
    p.fail("expected single whitespace byte before raster");
  }
  ++p.pos;
}

void require_raster(const Parser& p, std::size_t needed) {
  if (p.data.size() - p.pos < needed) {
    throw ParseError("raster truncated: need " + std::to_string(needed) +
                         " bytes, have " + std::to_string(p.data.size() - p.pos),
                     p.pos);
  }
}

std::uint8_t to_byte(double v) {
  const double q = std::round(v);
  if (q <= 0.0) return 0;
  if (q >= 255.0) return 255;
  return static_cast<std::uint8_t>(q);
}

void store(const std::filesystem::path& path, const std::string& header,
           const std::vector<std::uint8_t>& raster) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char*>(raster.data()),
            static_cast<std::streamsize>(raster.size()));
  out.flush();
  if (!out) {
    throw IoError("write failure on " + path.string());
  }
}

}  // namespace

RgbImage read_ppm(const std::filesystem::path& path) {
  Parser p = load(path);
  int w = 0, h = 0;
  parse_header(p, '6', w, h);
  require_raster(p, static_cast<std::size_t>(w) * h * 3);

  RgbImage image{Plane(w, h), Plane(w, h), Plane(w, h)};
  const unsigned char* src = p.data.data() + p.pos;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      image.r.at(r, c) = *src++;
      image.g.at(r, c) = *src++;
      image.b.at(r, c) = *src++;
    }
  }
  return image;
}

Plane read_pgm(const std::filesystem::path& path) {
  Parser p = load(path);
  int w = 0, h = 0;
  parse_header(p, '5', w, h);
  require_raster(p, static_cast<std::size_t>(w) * h);

  Plane plane(w, h);
  const unsigned char* src = p.data.data() + p.pos;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      plane.at(r, c) = *src++;
    }
  }
  return plane;
}

std::variant<RgbImage, Plane> read_image(const std::filesystem::path& path) {
  Parser p = load(path);
  if (p.data.size() < 2 || p.data[0] != 'P') p.fail("missing PNM magic");
  switch (p.data[1]) {
    case '6':
      return read_ppm(path);
    case '5':
      return read_pgm(path);
    default:
      p.pos = 1;
      p.fail("unsupported PNM kind (only binary P5/P6)");
  }
}

void write_ppm(const RgbImage& image, const std::filesystem::path& path) {
  require_same_size(image, "write_ppm");
  const int w = image.width(), h = image.height();
  std::vector<std::uint8_t> raster;
  raster.reserve(static_cast<std::size_t>(w) * h * 3);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      raster.push_back(to_byte(image.r.at(r, c)));
      raster.push_back(to_byte(image.g.at(r, c)));
      raster.push_back(to_byte(image.b.at(r, c)));
    }
  }
  store(path,
        "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n",
        raster);
}

void write_pgm(const Plane& plane, const std::filesystem::path& path) {
  const int w = plane.width(), h = plane.height();
  std::vector<std::uint8_t> raster;
  raster.reserve(static_cast<std::size_t>(w) * h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      raster.push_back(to_byte(plane.at(r, c)));
    }
  }
  store(path,
        "P5\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n",
        raster);
}

}  // namespace chroma
