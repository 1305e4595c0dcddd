#include "cineparse/rhythm.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace cineparse {

ShotGroup make_group(const VideoDocument& doc, int first_shot, int last_shot) {
  if (first_shot < 0 || last_shot >= static_cast<int>(doc.shots.size()) || first_shot > last_shot)
    fail(Errc::bad_input, "shot range out of bounds");
  ShotGroup group;
  group.first_shot = first_shot;
  for (int i = first_shot; i <= last_shot; ++i) group.durations.push_back(doc.shots[i].td);
  return group;
}

Frame duration_variation(const Shot& a, const Shot& b) { return std::llabs(a.td - b.td); }

RhythmStats rhythm_stats(const ShotGroup& group, DeviationDenominator denom) {
  const std::size_t n = group.size();
  if (n < 2) fail(Errc::group_too_small, "rhythm statistics need at least two shots");

  RhythmStats stats;
  stats.group_size = n;
  stats.denominator = denom == DeviationDenominator::paper_n ? n : n - 1;
  stats.variations.reserve(n - 1);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double v = std::abs(static_cast<double>(group.durations[i] - group.durations[i + 1]));
    stats.variations.push_back(v);
    sum += v;
  }
  stats.mean_variation = sum / static_cast<double>(stats.denominator);

  double sq = 0.0;
  for (double v : stats.variations) {
    const double d = v - stats.mean_variation;
    sq += d * d;
  }
  stats.deviation = std::sqrt(sq / static_cast<double>(stats.denominator));
  return stats;
}

SafeInterval safe_interval(const RhythmStats& stats, double alpha) {
  return {stats.mean_variation - alpha * stats.deviation,
          stats.mean_variation + alpha * stats.deviation};
}

AggregationResult aggregation_test(const ShotGroup& group, const Shot& candidate, double alpha,
                                   GroupSide side, DeviationDenominator denom) {
  const bool front = side == GroupSide::front;
  const int boundary_id = front ? group.first_shot : group.last_shot();
  const int expected = front ? group.first_shot - 1 : group.last_shot() + 1;
  if (candidate.id != expected)
    fail(Errc::not_adjacent, "candidate shot " + std::to_string(candidate.id) +
                                 " is not adjacent to the group on the tested side");

  const RhythmStats stats = rhythm_stats(group, denom);
  const std::size_t offset = static_cast<std::size_t>(boundary_id - group.first_shot);
  const Frame boundary_td = group.durations[offset];
  const double v = std::abs(static_cast<double>(boundary_td - candidate.td));
  const double gap = std::abs(v - stats.mean_variation);

  AggregationResult result;
  result.variation = v;
  result.accepted = gap <= alpha * stats.deviation;
  if (stats.deviation > 0.0)
    result.zscore = gap / stats.deviation;
  else
    result.zscore = gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return result;
}

std::vector<ShotGroup> rhythm_segment(const VideoDocument& doc, int first_shot, int last_shot,
                                      int min_group, double alpha, DeviationDenominator denom) {
  if (min_group < 3) fail(Errc::bad_input, "rhythm segmentation needs groups of at least three");
  if (first_shot < 0 || last_shot >= static_cast<int>(doc.shots.size()) || first_shot > last_shot)
    fail(Errc::bad_input, "shot range out of bounds");

  std::vector<ShotGroup> groups;
  int cursor = first_shot;
  while (cursor <= last_shot) {
    const int remaining = last_shot - cursor + 1;
    if (remaining < min_group) {
      groups.push_back(make_group(doc, cursor, last_shot));
      break;
    }
    ShotGroup group = make_group(doc, cursor, cursor + min_group - 1);
    int next = cursor + min_group;
    while (next <= last_shot) {
      const AggregationResult probe =
          aggregation_test(group, doc.shots[next], alpha, GroupSide::back, denom);
      if (!probe.accepted) break;
      group.durations.push_back(doc.shots[next].td);
      ++next;
    }
    cursor = next;
    groups.push_back(std::move(group));
  }
  return groups;
}

}  // namespace cineparse
