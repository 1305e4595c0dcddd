#include <benchmark/benchmark.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "cineparse/clustering.hpp"
#include "cineparse/coupling.hpp"
#include "cineparse/foe_match.hpp"
#include "cineparse/histogram.hpp"
#include "cineparse/random.hpp"
#include "cineparse/synth.hpp"
#include "cineparse/temporal_graph.hpp"

namespace {

using namespace cineparse;

Image random_image(int side, std::uint64_t seed) {
  StableRng rng(seed);
  Image img;
  img.width = side;
  img.height = side;
  img.pixels.resize(static_cast<std::size_t>(side) * side * 3);
  for (auto& byte : img.pixels) byte = static_cast<std::uint8_t>(rng.uniform_int(0, 255));
  return img;
}

// Document with the requested shot count: scenes of eight shots over two
// clusters each, mildly jittered beats. Eight bins keep the color budget
// ahead of the cluster demand.
VideoDocument make_document(int shots) {
  FixtureSpec spec;
  spec.seed = 7;
  spec.bins_per_channel = 8;
  SequenceSpec seq;
  for (int placed = 0; placed < shots; placed += 8) {
    SceneSpec scene;
    scene.shots = std::min(8, shots - placed);
    scene.clusters = scene.shots >= 3 ? 2 : 1;
    scene.base_duration = 10;
    scene.sigma = 1.0;
    seq.scenes.push_back(scene);
  }
  spec.sequences.push_back(std::move(seq));
  return synthesize(spec).first;
}

PointPattern random_pattern(int points, std::uint64_t seed) {
  StableRng rng(seed);
  PointPattern p;
  for (int i = 0; i < points; ++i)
    p.points.push_back({rng.uniform() * 100.0, rng.uniform() * 100.0});
  return p;
}

void BM_compute_histogram(benchmark::State& state) {
  const Image img = random_image(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(compute_histogram(img, 4));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(img.pixel_count()));
}
BENCHMARK(BM_compute_histogram)->Arg(16)->Arg(64)->Arg(256);

void BM_dissimilarity(benchmark::State& state) {
  const int bins = static_cast<int>(state.range(0));
  const Histogram a = compute_histogram(random_image(64, 21), bins);
  const Histogram b = compute_histogram(random_image(64, 22), bins);
  for (auto _ : state) benchmark::DoNotOptimize(dissimilarity(a, b));
}
BENCHMARK(BM_dissimilarity)->Arg(4)->Arg(8);

void BM_cluster_document(benchmark::State& state) {
  const VideoDocument doc = make_document(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cluster_document(doc, 0.1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(doc.shots.size()));
}
BENCHMARK(BM_cluster_document)->Arg(64)->Arg(256)->Arg(1024);

void BM_build_tcg(benchmark::State& state) {
  const VideoDocument doc = make_document(static_cast<int>(state.range(0)));
  const TimeSpaceGraph tsg = cluster_document(doc, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(build_tcg(tsg, doc));
}
BENCHMARK(BM_build_tcg)->Arg(64)->Arg(256)->Arg(1024);

void BM_segment_full(benchmark::State& state) {
  const VideoDocument doc = make_document(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(segment_full(doc));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(doc.shots.size()));
}
BENCHMARK(BM_segment_full)->Arg(64)->Arg(256)->Arg(1024);

void BM_pattern_resemblance(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  const PointPattern a = random_pattern(points, 31);
  const PointPattern b = random_pattern(points, 32);
  MatchConfig cfg;
  cfg.zone_radius = 5.0;
  for (auto _ : state) benchmark::DoNotOptimize(pattern_resemblance(a, b, cfg));
  state.SetItemsProcessed(state.iterations() * points);
}
BENCHMARK(BM_pattern_resemblance)->Arg(32)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
