#include "cineparse/foe_match.hpp"

#include <algorithm>
#include <cmath>

namespace cineparse {

namespace {

double directed_resemblance(const PointPattern& base, const PointPattern& other,
                            const MatchConfig& cfg) {
  if (base.points.empty()) return cfg.penalty;
  double sum = 0.0;
  for (const auto& [x, y] : base.points) {
    double best = cfg.penalty;
    for (const auto& [ox, oy] : other.points) {
      const double d = std::hypot(x - ox, y - oy);
      if (d <= cfg.zone_radius) best = std::max(best, 1.0 - d / cfg.zone_radius);
    }
    sum += best;
  }
  return sum / static_cast<double>(base.points.size());
}

}  // namespace

double pattern_resemblance(const PointPattern& p1, const PointPattern& p2,
                           const MatchConfig& cfg) {
  if (p1.points.empty() && p2.points.empty())
    fail(Errc::both_empty, "cannot compare two empty point patterns");
  if (cfg.zone_radius <= 0.0) fail(Errc::bad_input, "zone radius must be positive");
  if (cfg.penalty > 1.0) fail(Errc::bad_input, "penalty exceeds the best local score");

  // Iterate over the smaller pattern; equal sizes pick one side by content so
  // the score cannot depend on argument order.
  const bool base_first = p1.points.size() != p2.points.size()
                              ? p1.points.size() < p2.points.size()
                              : p1.points <= p2.points;
  const PointPattern& base = base_first ? p1 : p2;
  const PointPattern& other = base_first ? p2 : p1;
  return directed_resemblance(base, other, cfg);
}

std::vector<TransitionMark> detect_shot_transitions(const std::vector<PointPattern>& patterns,
                                                    const MatchConfig& cfg) {
  if (patterns.size() < 2) fail(Errc::bad_input, "transition detection needs at least two frames");

  std::vector<double> scores(patterns.size() - 1);
  for (std::size_t i = 0; i + 1 < patterns.size(); ++i)
    scores[i] = pattern_resemblance(patterns[i], patterns[i + 1], cfg);

  std::vector<TransitionMark> marks;
  std::size_t i = 0;
  while (i < scores.size()) {
    if (scores[i] >= cfg.threshold) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < scores.size() && scores[j + 1] < cfg.threshold) ++j;
    const int run = static_cast<int>(j - i + 1);
    if (run >= cfg.min_gradual_run) {
      marks.push_back({static_cast<int>(i) + 1, TransitionKind::dissolve, run});
    } else {
      // Short runs read as one abrupt change at their sharpest boundary.
      std::size_t sharpest = i;
      for (std::size_t k = i + 1; k <= j; ++k)
        if (scores[k] < scores[sharpest]) sharpest = k;
      marks.push_back({static_cast<int>(sharpest) + 1, TransitionKind::cut, 1});
    }
    i = j + 1;
  }
  return marks;
}

}  // namespace cineparse
