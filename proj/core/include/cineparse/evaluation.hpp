#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cineparse/scene_extraction.hpp"
#include "cineparse/synth.hpp"

namespace cineparse {

struct SceneDiff {
  std::optional<SequenceSpan> predicted;
  std::optional<SequenceSpan> truth;

  bool operator==(const SceneDiff&) const = default;
};

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int predicted_scenes = 0;
  int truth_scenes = 0;
  int surviving_one_shot = 0;
  std::vector<SceneDiff> scene_diffs;
};

// Boundary-based scoring: scene starts (except shot 0) are boundaries, and a
// predicted boundary counts when a truth boundary lies within the tolerance.
// No predictions against a non-empty truth score zero across the board; two
// empty boundary sets are a perfect match.
EvalReport evaluate(const Segmentation& predicted, const GroundTruth& truth, int tolerance = 0);

// Aligned plain-text rows: scene index, optional initial-stage interval,
// predicted interval, truth interval.
std::string render_table(const std::optional<Segmentation>& initial, const Segmentation& predicted,
                         const GroundTruth& truth);

}  // namespace cineparse
