// SPDX-License-Identifier: Apache-2.0
//
// Command line front end for the chroma subsampling toolkit.
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 dimension or
// format error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "chroma/colorspace.hpp"
#include "chroma/metrics.hpp"
#include "chroma/pipeline.hpp"
#include "chroma/pnm.hpp"
#include "chroma/rcri.hpp"
#include "chroma/sweep.hpp"

namespace {

using namespace chroma;

bool parse_on_off(const std::string& value) {
  if (value == "on") return true;
  if (value == "off") return false;
  throw UsageError("expected 'on' or 'off', got '" + value + "'");
}

// Accepts a 7-character binary string or a 0x-prefixed byte.
HammingWord parse_word(const std::string& text) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    const unsigned long value = std::stoul(text.substr(2), nullptr, 16);
    if (value > 0xFF) throw UsageError("byte out of range: " + text);
    return HammingWord::from_byte(static_cast<std::uint8_t>(value));
  }
  if (text.size() != 7) {
    throw UsageError("expected 7 binary digits or 0xNN, got '" + text + "'");
  }
  std::uint8_t bits = 0;
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw UsageError("binary word may only contain 0 and 1");
    }
    bits = static_cast<std::uint8_t>((bits << 1) | (ch - '0'));
  }
  return {bits};
}

std::string word_string(HammingWord w) {
  std::string out(7, '0');
  for (int k = 0; k < 7; ++k) {
    if (w.bits & (1 << (6 - k))) out[k] = '1';
  }
  return out;
}

std::string side_info_string(SideInfoWord w) {
  std::string out(4, '0');
  for (int k = 0; k < 4; ++k) {
    if (w.bits & (1 << (3 - k))) out[k] = '1';
  }
  return out;
}

struct PipelineOptions {
  std::string input, output, report;
  std::string method = "a";
  std::string naive = "bili";
  std::string preferred = "bili";
  std::string rcri = "on";
  std::string pattern = "grbg";
  int flips = 0;
  std::uint64_t seed = 0;
};

PipelineConfig to_config(const PipelineOptions& opt) {
  PipelineConfig config;
  config.subsampler = parse_subsampler(opt.method);
  config.naive_upsampler = parse_upsampler(opt.naive);
  config.preferred_upsampler = parse_upsampler(opt.preferred);
  config.rcri_enabled = parse_on_off(opt.rcri);
  config.channel_flips = opt.flips;
  config.rng_seed = opt.seed;
  config.cfa_pattern = parse_pattern(opt.pattern);
  return config;
}

void add_pipeline_flags(CLI::App* cmd, PipelineOptions& opt) {
  cmd->add_option("--method", opt.method, "subsampler: d, mpegb, l, a, r");
  cmd->add_option("--upsampler", opt.naive,
                  "client process when rcri is off: copy, bili, nedi, bicu");
  cmd->add_option("--preferred", opt.preferred,
                  "process the server recommends in the side info");
  cmd->add_option("--rcri", opt.rcri, "use the side information: on, off");
  cmd->add_option("--flips", opt.flips,
                  "side-information bits the channel corrupts (0..7)");
  cmd->add_option("--seed", opt.seed, "channel noise seed");
  cmd->add_option("--pattern", opt.pattern,
                  "CFA pattern: grbg, rggb, bggr, gbrg");
  cmd->set_config("--config")->description(
      "key=value file with the same names as the flags");
}

int run(int argc, char** argv) {
  CLI::App app{
      "chromatool - 4:2:0 chroma subsampling pipeline with "
      "side-information signaling and displacement re-interpolation"};
  app.require_subcommand(1);

  // ---- convert ----
  std::string conv_in, conv_out;
  CLI::App* conv = app.add_subcommand(
      "convert", "re-encode a pixmap/graymap; ppm->pgm takes the luma");
  conv->add_option("--input", conv_in)->required();
  conv->add_option("--output", conv_out)->required();
  conv->callback([&] {
    const auto image = read_image(conv_in);
    const std::string ext = std::filesystem::path(conv_out).extension();
    if (ext == ".ppm") {
      if (std::holds_alternative<RgbImage>(image)) {
        write_ppm(std::get<RgbImage>(image), conv_out);
      } else {
        const Plane& gray = std::get<Plane>(image);
        write_ppm({gray, gray, gray}, conv_out);
      }
    } else if (ext == ".pgm") {
      if (std::holds_alternative<Plane>(image)) {
        write_pgm(std::get<Plane>(image), conv_out);
      } else {
        write_pgm(quantize8(rgb_to_ycbcr(std::get<RgbImage>(image)).y),
                  conv_out);
      }
    } else {
      throw UsageError("output extension must be .ppm or .pgm");
    }
  });

  // ---- subsample ----
  std::string sub_in, sub_cb, sub_cr, sub_y, sub_method = "a";
  CLI::App* sub = app.add_subcommand(
      "subsample", "color-transform a pixmap and write quarter chroma");
  sub->add_option("--input", sub_in)->required();
  sub->add_option("--method", sub_method, "d, mpegb, l, a, r");
  sub->add_option("--cb", sub_cb, "output graymap for quarter Cb")
      ->required();
  sub->add_option("--cr", sub_cr, "output graymap for quarter Cr")
      ->required();
  sub->add_option("--y", sub_y, "optional output graymap for full-size Y");
  sub->callback([&] {
    const RgbImage image = read_ppm(sub_in);
    if (image.width() % 2 != 0 || image.height() % 2 != 0) {
      throw DimensionError("subsample: image dimensions must be even");
    }
    const YcbcrImage ycc = rgb_to_ycbcr(image);
    const QuarterChroma quarter =
        subsample(ycc.cb, ycc.cr, parse_subsampler(sub_method));
    write_pgm(quantize8(quarter.cb), sub_cb);
    write_pgm(quantize8(quarter.cr), sub_cr);
    if (!sub_y.empty()) write_pgm(quantize8(ycc.y), sub_y);
  });

  // ---- upsample ----
  std::string up_in, up_out, up_process = "bili";
  CLI::App* up = app.add_subcommand(
      "upsample", "double a quarter-resolution graymap");
  up->add_option("--input", up_in)->required();
  up->add_option("--process,--upsampler", up_process,
                 "copy, bili, nedi, bicu");
  up->add_option("--output", up_out)->required();
  up->callback([&] {
    const Plane quarter = read_pgm(up_in);
    const Plane full =
        upsample(quarter, parse_upsampler(up_process), 2 * quarter.width(),
                 2 * quarter.height());
    write_pgm(full, up_out);
  });

  // ---- sideinfo ----
  CLI::App* side = app.add_subcommand(
      "sideinfo", "encode or decode the protected side-information word");
  side->require_subcommand(1);

  std::string enc_class = "topleft", enc_up = "bili";
  CLI::App* enc = side->add_subcommand("encode");
  enc->add_option("--class", enc_class, "topleft, left, mid, right");
  enc->add_option("--upsampler", enc_up, "copy, bili, nedi, bicu");
  enc->callback([&] {
    ChromaClass cls;
    if (enc_class == "topleft") cls = ChromaClass::TopLeft;
    else if (enc_class == "left") cls = ChromaClass::Left;
    else if (enc_class == "mid") cls = ChromaClass::Mid;
    else if (enc_class == "right") cls = ChromaClass::Right;
    else throw UsageError("unknown class '" + enc_class + "'");

    const SideInfoWord word = encode_side_info(cls, parse_upsampler(enc_up));
    const HammingWord coded = hamming_encode(word);
    std::printf("message=%s codeword=%s byte=0x%02X\n",
                side_info_string(word).c_str(), word_string(coded).c_str(),
                coded.to_byte());
  });

  std::string dec_word;
  CLI::App* dec = side->add_subcommand("decode");
  dec->add_option("--word", dec_word, "7 binary digits or 0xNN")->required();
  dec->callback([&] {
    const HammingDecodeResult r = hamming_decode(parse_word(dec_word));
    std::printf("message=%s class=%s upsampler=%s corrected=%s\n",
                side_info_string(r.word).c_str(),
                class_name(r.word.chroma_class()),
                upsampler_name(r.word.upsampler()),
                r.corrected_position
                    ? std::to_string(*r.corrected_position).c_str()
                    : "none");
  });

  // ---- pipeline ----
  PipelineOptions pipe_opt;
  CLI::App* pipe = app.add_subcommand(
      "pipeline", "run one image through server, channel and client");
  pipe->add_option("--input", pipe_opt.input)->required();
  pipe->add_option("--output", pipe_opt.output, "reconstructed pixmap")
      ->required();
  pipe->add_option("--report", pipe_opt.report,
                   "append a one-row quality CSV");
  add_pipeline_flags(pipe, pipe_opt);
  pipe->callback([&] {
    const PipelineConfig config = to_config(pipe_opt);
    const RgbImage image = read_ppm(pipe_opt.input);
    const RgbImage recon = run_pipeline(image, config);
    write_ppm(recon, pipe_opt.output);

    if (!pipe_opt.report.empty()) {
      PipelineConfig other = config;
      other.rcri_enabled = !config.rcri_enabled;
      const RgbImage recon_other = run_pipeline(image, other);
      const double score = cpsnr(image, recon);
      const double score_other = cpsnr(image, recon_other);

      ReportRow row;
      row.image = std::filesystem::path(pipe_opt.input).filename().string();
      row.subsampler = config.subsampler;
      row.cls = class_of(config.subsampler);
      row.naive_upsampler = config.naive_upsampler;
      row.rcri = config.rcri_enabled;
      row.cpsnr_db = score;
      row.ssimc = ssimc(image, recon);
      const BayerImage bayer = mosaic(image, config.cfa_pattern);
      const BayerImage brecon = run_bayer(bayer, config);
      row.psnr_db = psnr(bayer.plane, brecon.plane);
      row.ssim = ssim(bayer.plane, brecon.plane);
      row.gain_cpsnr_db = config.rcri_enabled ? score - score_other
                                              : score_other - score;

      std::ofstream out(pipe_opt.report, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot open " + pipe_opt.report);
      out << csv_header() << '\n' << csv_row(row) << '\n';
    }
  });

  // ---- bayer ----
  CLI::App* bayer = app.add_subcommand(
      "bayer", "CFA mosaic extraction and demosaicking");
  bayer->require_subcommand(1);

  std::string bm_in, bm_out, bm_pattern = "grbg";
  CLI::App* bm = bayer->add_subcommand("mosaic");
  bm->add_option("--input", bm_in)->required();
  bm->add_option("--pattern", bm_pattern, "grbg, rggb, bggr, gbrg");
  bm->add_option("--output", bm_out)->required();
  bm->callback([&] {
    const BayerImage out =
        mosaic(read_ppm(bm_in), parse_pattern(bm_pattern));
    write_pgm(out.plane, bm_out);
  });

  std::string bd_in, bd_out, bd_pattern = "grbg";
  CLI::App* bd = bayer->add_subcommand("demosaic");
  bd->add_option("--input", bd_in)->required();
  bd->add_option("--pattern", bd_pattern, "grbg, rggb, bggr, gbrg");
  bd->add_option("--output", bd_out)->required();
  bd->callback([&] {
    const RgbImage out =
        demosaic_bilinear({read_pgm(bd_in), parse_pattern(bd_pattern)});
    write_ppm(out, bd_out);
  });

  // ---- metrics ----
  std::string met_ref, met_test;
  CLI::App* met = app.add_subcommand(
      "metrics", "emit one quality CSV row for a reference/test pair");
  met->add_option("--ref", met_ref)->required();
  met->add_option("--test", met_test)->required();
  met->callback([&] {
    const auto ref = read_image(met_ref);
    const auto test = read_image(met_test);
    if (ref.index() != test.index()) {
      throw UsageError("--ref and --test must both be pixmaps or graymaps");
    }
    std::cout << "ref,test,cpsnr_db,ssimc,psnr_db,ssim\n";
    std::cout << met_ref << ',' << met_test << ',';
    if (std::holds_alternative<RgbImage>(ref)) {
      const RgbImage& a = std::get<RgbImage>(ref);
      const RgbImage& b = std::get<RgbImage>(test);
      std::cout << format_db(cpsnr(a, b)) << ',' << format_ssim(ssimc(a, b))
                << ",,\n";
    } else {
      const Plane& a = std::get<Plane>(ref);
      const Plane& b = std::get<Plane>(test);
      std::cout << ",," << format_db(psnr(a, b)) << ','
                << format_ssim(ssim(a, b)) << "\n";
    }
  });

  // ---- sweep ----
  PipelineOptions sweep_opt;
  std::string sweep_dir;
  CLI::App* sw = app.add_subcommand(
      "sweep", "run a dataset through every combination and write a CSV");
  sw->add_option("--input", sweep_dir, "directory of .ppm images")
      ->required();
  sw->add_option("--report", sweep_opt.report, "output CSV path")
      ->required();
  add_pipeline_flags(sw, sweep_opt);
  sw->callback([&] {
    const QualityReport report =
        sweep(sweep_dir, sweep_opt.report, to_config(sweep_opt));
    std::printf("%zu rows over %s\n", report.rows.size(),
                sweep_dir.c_str());
    std::printf(
        "subsampler  cpsnr_gain(matched=0)  cpsnr_gain(excl)  "
        "psnr_gain(matched=0)  psnr_gain(excl)\n");
    for (const SubsamplerSummary& s : report.summaries) {
      std::printf("%-10s  %21s  %16s  %20s  %15s\n",
                  subsampler_name(s.subsampler),
                  format_db(s.cpsnr_gain_matched_zero).c_str(),
                  format_db(s.cpsnr_gain_excluding_matched).c_str(),
                  format_db(s.psnr_gain_matched_zero).c_str(),
                  format_db(s.psnr_gain_excluding_matched).c_str());
    }
    for (const std::string& warning : report.warnings) {
      std::fprintf(stderr, "warning: %s\n", warning.c_str());
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const chroma::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const chroma::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const chroma::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const chroma::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
