// SPDX-License-Identifier: Apache-2.0
//
// Writes the deterministic synthetic evaluation images so the sweep and
// pipeline commands have something to chew on out of the box.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "chroma/testset.hpp"

int main(int argc, char** argv) {
  CLI::App app{"testgen - write the synthetic evaluation image set"};
  std::string output = "testset";
  int count = 6;
  int width = 160;
  int height = 160;
  app.add_option("--output", output, "target directory");
  app.add_option("--count", count, "number of images")
      ->check(CLI::PositiveNumber);
  app.add_option("--width", width)->check(CLI::PositiveNumber);
  app.add_option("--height", height)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    const auto paths = chroma::write_testset(output, count, width, height);
    for (const auto& p : paths) std::printf("%s\n", p.c_str());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
