// SPDX-License-Identifier: Apache-2.0
#include "chroma/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "chroma/metrics.hpp"
#include "chroma/pnm.hpp"

namespace chroma {

namespace {

constexpr std::array<SubsamplerKind, 5> kSubsamplers = {
    SubsamplerKind::D, SubsamplerKind::MpegB, SubsamplerKind::L,
    SubsamplerKind::A, SubsamplerKind::R};
constexpr std::array<UpsamplerKind, 4> kUpsamplers = {
    UpsamplerKind::Copy, UpsamplerKind::Bili, UpsamplerKind::Nedi,
    UpsamplerKind::Bicu};

std::string format_infinity(double value) {
  if (value > 0) return "inf";
  return "-inf";
}

// rcri minus naive, with the both-infinite case (bit-identical
// reconstructions on both sides) pinned to zero.
double score_gain(double rcri, double naive) {
  if (std::isinf(rcri) && std::isinf(naive) && rcri == naive) return 0.0;
  return rcri - naive;
}

// cpsnr_db/ssimc from the RGB branch, psnr_db/ssim from the Bayer branch.
struct BranchScores {
  QualityScore q;
  double ssimc_value = 0.0;
};

// Scores for one (image, subsampler): the rcri reconstruction is
// independent of the client's own process choice, so it is computed once
// and shared by the four naive rows.
struct CombinationScores {
  BranchScores rcri;
  std::array<BranchScores, 4> naive;
};

CombinationScores measure_combination(const RgbImage& original,
                                      const BayerImage& bayer_original,
                                      const RgbImage& demosaiced,
                                      SubsamplerKind subsampler,
                                      const PipelineConfig& base) {
  PipelineConfig config = base;
  config.subsampler = subsampler;

  const EncodedPayload rgb_payload =
      channel(run_server(original, config), config.channel_flips,
              config.rng_seed);
  const EncodedPayload bayer_payload =
      channel(run_server(demosaiced, config), config.channel_flips,
              config.rng_seed);

  const auto measure = [&](bool rcri, UpsamplerKind naive) {
    PipelineConfig run = config;
    run.rcri_enabled = rcri;
    run.naive_upsampler = naive;

    BranchScores s;
    const RgbImage rgb_recon = run_client(rgb_payload, run);
    s.q.cpsnr_db = cpsnr(original, rgb_recon);
    s.ssimc_value = ssimc(original, rgb_recon);

    const BayerImage bayer_recon{
        mosaic(run_client(bayer_payload, run), bayer_original.pattern).plane,
        bayer_original.pattern};
    s.q.psnr_db = psnr(bayer_original.plane, bayer_recon.plane);
    s.q.ssim = ssim(bayer_original.plane, bayer_recon.plane);
    return s;
  };

  CombinationScores out;
  out.rcri = measure(true, base.naive_upsampler);
  for (std::size_t u = 0; u < kUpsamplers.size(); ++u) {
    out.naive[u] = measure(false, kUpsamplers[u]);
  }
  return out;
}

}  // namespace

std::string format_db(double value) {
  if (std::isinf(value)) return format_infinity(value);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

std::string format_ssim(double value) {
  if (std::isinf(value)) return format_infinity(value);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string csv_header() {
  return "image,subsampler,class,naive_upsampler,rcri,cpsnr_db,ssimc,"
         "psnr_db,ssim,gain_cpsnr_db";
}

std::string csv_row(const ReportRow& row) {
  std::string out = row.image;
  out += ',';
  out += subsampler_name(row.subsampler);
  out += ',';
  out += class_name(row.cls);
  out += ',';
  out += upsampler_name(row.naive_upsampler);
  out += ',';
  out += row.rcri ? "on" : "off";
  out += ',';
  out += format_db(row.cpsnr_db);
  out += ',';
  out += format_ssim(row.ssimc);
  out += ',';
  out += format_db(row.psnr_db);
  out += ',';
  out += format_ssim(row.ssim);
  out += ',';
  out += format_db(row.gain_cpsnr_db);
  return out;
}

void write_report_csv(const QualityReport& report,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << csv_header() << '\n';
  for (const ReportRow& row : report.rows) {
    out << csv_row(row) << '\n';
  }
  for (const std::string& warning : report.warnings) {
    out << "# " << warning << '\n';
  }
  out.flush();
  if (!out) {
    throw IoError("write failure on " + path.string());
  }
}

QualityReport sweep(const std::filesystem::path& dataset_dir,
                    const std::filesystem::path& output_csv,
                    const PipelineConfig& config) {
  if (!std::filesystem::is_directory(dataset_dir)) {
    throw IoError("dataset directory " + dataset_dir.string() +
                  " does not exist");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dataset_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ppm") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw IoError("no .ppm images in " + dataset_dir.string());
  }

  QualityReport report;

  // Mean scores across images, keyed for the summary computation.
  std::map<std::pair<int, int>, double> naive_cpsnr_sum, naive_psnr_sum;
  std::map<int, double> rcri_cpsnr_sum, rcri_psnr_sum;
  int measured_images = 0;

  for (const auto& file : files) {
    RgbImage original;
    try {
      original = read_ppm(file);
      // 12x12 is the smallest even size the SSIM window accepts.
      if (original.width() % 2 != 0 || original.height() % 2 != 0 ||
          original.width() < 12 || original.height() < 12) {
        throw DimensionError("needs even dimensions of at least 12x12");
      }
    } catch (const Error& e) {
      report.warnings.push_back("skipped " + file.filename().string() + ": " +
                                e.what());
      continue;
    }

    const std::string name = file.filename().string();
    const BayerImage bayer_original = mosaic(original, config.cfa_pattern);
    const RgbImage demosaiced = demosaic_bilinear(bayer_original);
    ++measured_images;

    for (std::size_t s = 0; s < kSubsamplers.size(); ++s) {
      const SubsamplerKind sub = kSubsamplers[s];
      const CombinationScores scores = measure_combination(
          original, bayer_original, demosaiced, sub, config);

      rcri_cpsnr_sum[static_cast<int>(s)] += scores.rcri.q.cpsnr_db;
      rcri_psnr_sum[static_cast<int>(s)] += scores.rcri.q.psnr_db;

      for (std::size_t u = 0; u < kUpsamplers.size(); ++u) {
        const BranchScores& naive = scores.naive[u];
        naive_cpsnr_sum[{static_cast<int>(s), static_cast<int>(u)}] +=
            naive.q.cpsnr_db;
        naive_psnr_sum[{static_cast<int>(s), static_cast<int>(u)}] +=
            naive.q.psnr_db;

        const double gain = score_gain(scores.rcri.q.cpsnr_db, naive.q.cpsnr_db);
        ReportRow base;
        base.image = name;
        base.subsampler = sub;
        base.cls = class_of(sub);
        base.naive_upsampler = kUpsamplers[u];
        base.gain_cpsnr_db = gain;

        ReportRow off = base;
        off.rcri = false;
        off.cpsnr_db = naive.q.cpsnr_db;
        off.ssimc = naive.ssimc_value;
        off.psnr_db = naive.q.psnr_db;
        off.ssim = naive.q.ssim;
        report.rows.push_back(off);

        ReportRow on = base;
        on.rcri = true;
        on.cpsnr_db = scores.rcri.q.cpsnr_db;
        on.ssimc = scores.rcri.ssimc_value;
        on.psnr_db = scores.rcri.q.psnr_db;
        on.ssim = scores.rcri.q.ssim;
        report.rows.push_back(on);
      }
    }
  }

  if (measured_images == 0) {
    throw IoError("no readable even-sized image in " + dataset_dir.string());
  }

  for (std::size_t s = 0; s < kSubsamplers.size(); ++s) {
    SubsamplerSummary summary;
    summary.subsampler = kSubsamplers[s];
    const ChromaClass cls = class_of(kSubsamplers[s]);

    double cpsnr_sum = 0.0, psnr_sum = 0.0;
    double cpsnr_excl = 0.0, psnr_excl = 0.0;
    int included = 0;
    for (std::size_t u = 0; u < kUpsamplers.size(); ++u) {
      const bool matched = kUpsamplers[u] == config.preferred_upsampler &&
                           !has_true_ci(cls, config.preferred_upsampler);
      const double mean_rcri_cpsnr =
          rcri_cpsnr_sum[static_cast<int>(s)] / measured_images;
      const double mean_rcri_psnr =
          rcri_psnr_sum[static_cast<int>(s)] / measured_images;
      const double mean_naive_cpsnr =
          naive_cpsnr_sum[{static_cast<int>(s), static_cast<int>(u)}] /
          measured_images;
      const double mean_naive_psnr =
          naive_psnr_sum[{static_cast<int>(s), static_cast<int>(u)}] /
          measured_images;
      const double cpsnr_gain = score_gain(mean_rcri_cpsnr, mean_naive_cpsnr);
      const double psnr_gain = score_gain(mean_rcri_psnr, mean_naive_psnr);
      if (!matched) {
        cpsnr_sum += cpsnr_gain;
        psnr_sum += psnr_gain;
        cpsnr_excl += cpsnr_gain;
        psnr_excl += psnr_gain;
        ++included;
      }
    }
    summary.cpsnr_gain_matched_zero = cpsnr_sum / 4.0;
    summary.psnr_gain_matched_zero = psnr_sum / 4.0;
    summary.cpsnr_gain_excluding_matched = cpsnr_excl / included;
    summary.psnr_gain_excluding_matched = psnr_excl / included;
    report.summaries.push_back(summary);
  }

  write_report_csv(report, output_csv);
  return report;
}

}  // namespace chroma
