#pragma once

#include <vector>

#include "cineparse/temporal_graph.hpp"

namespace cineparse {

struct Scene {
  int id = 0;
  int first_shot = 0;
  int last_shot = 0;
  std::vector<int> clusters;  // ascending member cluster ids
  int sequence = 0;
  bool one_shot = false;

  int shot_count() const { return last_shot - first_shot + 1; }
  bool operator==(const Scene&) const = default;
};

struct Segmentation {
  std::vector<Scene> scenes;
  std::vector<SequenceSpan> sequences;

  bool operator==(const Segmentation&) const = default;
};

// One subgraph per sequence: gradual-transition edges are dropped, everything
// else keeps its original cluster ids.
std::vector<TemporalClustersGraph> split_sequences(const TemporalClustersGraph& tcg);

// Clusters chained by containment or partial overlap collapse into one scene;
// a bare meeting point separates scenes. Scene ids are left unassigned.
std::vector<Scene> extract_scenes(const TemporalClustersGraph& subgraph, const VideoDocument& doc);

Segmentation segment_spatial_temporal(const VideoDocument& doc, double threshold);

}  // namespace cineparse
