#pragma once

#include <vector>

#include "cineparse/errors.hpp"
#include "cineparse/model.hpp"

namespace cineparse {

// Candidate focus-of-expansion points of one frame.
struct PointPattern {
  std::vector<std::pair<double, double>> points;

  bool operator==(const PointPattern&) const = default;
};

struct MatchConfig {
  double zone_radius = 1.0;  // search zone around each point
  double penalty = 0.0;      // local score when nothing falls in the zone
  double threshold = 0.5;    // global score below which a boundary is flagged
  int min_gradual_run = 3;   // sub-threshold run length that reads as gradual
};

// Mean local resemblance over the smaller pattern: each point scores
// 1 - d/zone_radius against its best counterpart within the zone, or the
// penalty when the zone is empty. Orientation is normalized, so the score is
// symmetric; an empty pattern against a non-empty one scores the bare penalty.
double pattern_resemblance(const PointPattern& p1, const PointPattern& p2,
                           const MatchConfig& cfg);

struct TransitionMark {
  int frame = 0;  // first frame after the change begins
  TransitionKind kind = TransitionKind::cut;
  int length = 0;  // sub-threshold boundary count; 1 for a cut

  bool operator==(const TransitionMark&) const = default;
};

// Scores consecutive frames and turns sub-threshold runs into transition
// marks: runs shorter than min_gradual_run give one cut at their weakest
// boundary, longer ones read as a single gradual transition spanning the run.
std::vector<TransitionMark> detect_shot_transitions(const std::vector<PointPattern>& patterns,
                                                    const MatchConfig& cfg);

}  // namespace cineparse
