#pragma once

#include <vector>

#include "cineparse/model.hpp"

namespace cineparse {

// Contiguous run of shots considered as one rhythm group.
struct ShotGroup {
  int first_shot = 0;
  std::vector<Frame> durations;

  int last_shot() const { return first_shot + static_cast<int>(durations.size()) - 1; }
  std::size_t size() const { return durations.size(); }
};

ShotGroup make_group(const VideoDocument& doc, int first_shot, int last_shot);

// Denominator convention for the mean/deviation of duration variations.
// paper_n divides the n-1 consecutive variations by the group size n, as the
// source formulas literally read; unbiased divides by n-1.
enum class DeviationDenominator { paper_n, unbiased };

struct RhythmStats {
  std::vector<double> variations;  // |td[i] - td[i+1]| for consecutive members
  double mean_variation = 0.0;
  double deviation = 0.0;
  std::size_t group_size = 0;
  std::size_t denominator = 0;
};

struct SafeInterval {
  double low = 0.0;
  double high = 0.0;
};

Frame duration_variation(const Shot& a, const Shot& b);

RhythmStats rhythm_stats(const ShotGroup& group,
                         DeviationDenominator denom = DeviationDenominator::paper_n);

SafeInterval safe_interval(const RhythmStats& stats, double alpha);

enum class GroupSide { front, back };

struct AggregationResult {
  bool accepted = false;
  double variation = 0.0;
  double zscore = 0.0;  // |v - mean| in deviation units; 0 on an exact match
                        // when the deviation is zero, infinity otherwise
};

// Tests whether a shot adjacent to the group on the given side continues its
// rhythm: the boundary variation must land within alpha deviations of the
// group's mean variation.
AggregationResult aggregation_test(const ShotGroup& group, const Shot& candidate, double alpha,
                                   GroupSide side,
                                   DeviationDenominator denom = DeviationDenominator::paper_n);

// Forward sweep that seeds a group with min_group shots and extends it while
// the next shot passes the aggregation test, recomputing stats after every
// extension. Fewer than min_group leftover shots form the final group.
std::vector<ShotGroup> rhythm_segment(const VideoDocument& doc, int first_shot, int last_shot,
                                      int min_group, double alpha,
                                      DeviationDenominator denom = DeviationDenominator::paper_n);

}  // namespace cineparse
