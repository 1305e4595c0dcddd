#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cineparse/clustering.hpp"
#include "cineparse/histogram.hpp"
#include "cineparse/model.hpp"

namespace cineparse {

// One planted scene: a run of shots distributed over visual clusters.
// Omitting the pattern yields a connected default (first and last shot share
// cluster 0, the rest fill clusters 1.. in consecutive runs); omitting the
// durations samples base_duration with normal jitter clipped at three sigma.
struct SceneSpec {
  int shots = 1;
  int clusters = 1;
  std::vector<int> pattern;
  Frame base_duration = 10;
  double sigma = 0.0;
  std::vector<Frame> durations;
};

struct SequenceSpec {
  std::vector<SceneSpec> scenes;
  std::optional<TransitionEffect> transition;  // to the next sequence; dissolve of 30 if omitted
};

struct FixtureSpec {
  std::uint64_t seed = 0;
  double threshold = 0.1;
  int bins_per_channel = 4;
  int image_width = 16;
  int image_height = 16;
  Frame start_time = 0;
  std::vector<SequenceSpec> sequences;
};

struct GroundTruth {
  std::vector<SequenceSpan> sequences;
  std::vector<SequenceSpan> scenes;            // planted scene intervals
  std::vector<SequenceSpan> pre_rhythm_scenes; // what pure graph analysis yields
  std::vector<Cluster> clusters;
  int total_shots = 0;

  bool operator==(const GroundTruth&) const = default;
};

// Deterministic for a fixed seed. Every cluster owns a distinct color bin and
// shots carry precomputed histograms whose mutual distances respect the
// declared threshold: within a cluster strictly below, across clusters above.
std::pair<VideoDocument, GroundTruth> synthesize(const FixtureSpec& spec);

// Flat-color frame whose color histogram reproduces the given counts exactly.
Image render_keyframe(const Histogram& histogram, int width, int height);

}  // namespace cineparse
