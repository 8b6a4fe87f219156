// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "chroma/colorspace.hpp"
#include "chroma/metrics.hpp"
#include "chroma/pipeline.hpp"
#include "chroma/rcri.hpp"
#include "chroma/subsampling.hpp"
#include "chroma/testset.hpp"
#include "chroma/upsampling.hpp"

namespace {

using namespace chroma;

Plane noise_plane(int w, int h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 255.0);
  Plane p(w, h);
  for (double& v : p.samples()) v = dist(rng);
  return p;
}

void BM_RgbToYcbcr(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RgbImage image = make_test_image(0, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rgb_to_ycbcr(image));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_RgbToYcbcr)->Arg(256)->Arg(1024);

void BM_Subsample(benchmark::State& state) {
  const auto kind = static_cast<SubsamplerKind>(state.range(0));
  const Plane p = noise_plane(512, 512, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(subsample(p, p, kind));
  }
}
BENCHMARK(BM_Subsample)
    ->Arg(static_cast<int>(SubsamplerKind::D))
    ->Arg(static_cast<int>(SubsamplerKind::MpegB))
    ->Arg(static_cast<int>(SubsamplerKind::A));

void BM_Upsample(benchmark::State& state) {
  const auto kind = static_cast<UpsamplerKind>(state.range(0));
  const Plane quarter = noise_plane(128, 128, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(upsample(quarter, kind, 256, 256));
  }
}
BENCHMARK(BM_Upsample)
    ->Arg(static_cast<int>(UpsamplerKind::Copy))
    ->Arg(static_cast<int>(UpsamplerKind::Bili))
    ->Arg(static_cast<int>(UpsamplerKind::Nedi))
    ->Arg(static_cast<int>(UpsamplerKind::Bicu));

void BM_Reinterpolate(benchmark::State& state) {
  const Plane u = noise_plane(256, 256, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        reinterpolate(u, ChromaClass::Mid, UpsamplerKind::Bili));
  }
}
BENCHMARK(BM_Reinterpolate);

void BM_HammingRoundTrip(benchmark::State& state) {
  int m = 0;
  for (auto _ : state) {
    const HammingWord w = hamming_encode({static_cast<std::uint8_t>(m & 15)});
    benchmark::DoNotOptimize(hamming_decode(w));
    ++m;
  }
}
BENCHMARK(BM_HammingRoundTrip);

void BM_Ssim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Plane a = noise_plane(n, n, 4);
  const Plane b = noise_plane(n, n, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ssim(a, b));
  }
}
BENCHMARK(BM_Ssim)->Arg(160)->Arg(512);

void BM_EndToEnd(benchmark::State& state) {
  const RgbImage image = make_test_image(1, 160, 160);
  PipelineConfig config;
  config.subsampler = SubsamplerKind::A;
  config.rcri_enabled = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_pipeline(image, config));
  }
}
BENCHMARK(BM_EndToEnd)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
