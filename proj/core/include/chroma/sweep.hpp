// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "chroma/pipeline.hpp"

namespace chroma {

// One measured combination. Every (image, subsampler, naive_upsampler)
// pair produces two rows, rcri off and on; gain_cpsnr_db is the rcri
// minus naive CPSNR of the pair and is repeated on both rows.
struct ReportRow {
  std::string image;
  SubsamplerKind subsampler = SubsamplerKind::D;
  ChromaClass cls = ChromaClass::TopLeft;
  UpsamplerKind naive_upsampler = UpsamplerKind::Copy;
  bool rcri = false;
  double cpsnr_db = 0.0;
  double ssimc = 0.0;
  double psnr_db = 0.0;   // Bayer branch
  double ssim = 0.0;      // Bayer branch
  double gain_cpsnr_db = 0.0;
};

// Dataset-level average gains for one subsampler, weighting each client
// upsampler choice by 1/4. The combination whose process matches the
// signaled preference and has no true coordinate inconsistency gets no
// benefit from the side information; the two columns handle it
// differently: `matched_zero` folds it in as a zero term (divide by 4),
// `excluding_matched` averages only the remaining combinations.
struct SubsamplerSummary {
  SubsamplerKind subsampler = SubsamplerKind::D;
  double cpsnr_gain_matched_zero = 0.0;
  double cpsnr_gain_excluding_matched = 0.0;
  double psnr_gain_matched_zero = 0.0;
  double psnr_gain_excluding_matched = 0.0;
};

struct QualityReport {
  std::vector<ReportRow> rows;
  std::vector<SubsamplerSummary> summaries;
  std::vector<std::string> warnings;  // skipped inputs, one line each
};

// Runs every image in dataset_dir (files matching *.ppm, sorted by name)
// through all 5 subsamplers x 4 client upsamplers x {naive, rcri}, on both
// the RGB branch and the Bayer branch (pattern from config), and writes
// the rows to output_csv. Unreadable or odd-sized images are skipped with
// a warning recorded in the report (and echoed as trailing '#' comment
// lines in the CSV). Throws IoError when no image can be processed.
// Output is deterministic: identical inputs, config and seed produce a
// byte-identical CSV.
QualityReport sweep(const std::filesystem::path& dataset_dir,
                    const std::filesystem::path& output_csv,
                    const PipelineConfig& config);

// CSV pieces, exposed for the metrics subcommand and tests. Scores print
// with fixed precision; infinities print as "inf"/"-inf".
std::string csv_header();
std::string csv_row(const ReportRow& row);
std::string format_db(double value);
std::string format_ssim(double value);

void write_report_csv(const QualityReport& report,
                      const std::filesystem::path& path);

}  // namespace chroma
