#pragma once

#include <string>
#include <vector>

#include "cineparse/histogram.hpp"
#include "cineparse/model.hpp"

namespace cineparse {

// Shots of one sequence that look alike: every member sits within the cut
// threshold of the cluster's seed (its earliest shot).
struct Cluster {
  int id = 0;
  int sequence = 0;
  std::vector<int> shots;  // ascending shot ids; front() is the seed

  bool operator==(const Cluster&) const = default;
};

// Clusters plus the shot -> cluster assignment for the whole document.
struct TimeSpaceGraph {
  std::vector<Cluster> clusters;
  std::vector<int> cluster_of_shot;

  bool operator==(const TimeSpaceGraph&) const = default;
};

// Greedy first-fit pass over one sequence: the earliest unclassified shot
// seeds a cluster and every later unclassified shot strictly within the
// threshold of that seed joins it.
std::vector<Cluster> cluster_sequence(const VideoDocument& doc, const SequenceSpan& span,
                                      double threshold);

TimeSpaceGraph cluster_document(const VideoDocument& doc, double threshold);

// Plain-text rendering, one row per cluster, one column per shot.
std::string export_timeline(const TimeSpaceGraph& tsg, const VideoDocument& doc);

}  // namespace cineparse
