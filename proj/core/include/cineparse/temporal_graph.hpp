#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cineparse/clustering.hpp"
#include "cineparse/model.hpp"

namespace cineparse {

// Half-open frame hull of a cluster: first member's start to last member's end.
struct ClusterSpan {
  Frame start = 0;
  Frame end = 0;

  bool operator==(const ClusterSpan&) const = default;
};

ClusterSpan cluster_span(const Cluster& cluster, const VideoDocument& doc);

// Temporal relation between two clusters, read left to right in span order:
//   meets      left's hull ends exactly where right's begins (same sequence)
//   before     same, but separated by a gradual transition of params[0] frames
//   during     right's hull sits inside left's; params are the time codes of
//              right's shots
//   overlaps   hulls partially intersect; params are the time codes of right's
//              shots inside left's hull, then the first one beyond it
enum class RelationKind { meets, before, during, overlaps };

const char* to_string(RelationKind kind);
RelationKind relation_kind_from_string(const std::string& name);

struct AllenRelation {
  RelationKind kind = RelationKind::meets;
  std::vector<Frame> params;

  bool operator==(const AllenRelation&) const = default;
};

struct TcgEdge {
  int left = 0;
  int right = 0;
  AllenRelation relation;

  bool operator==(const TcgEdge&) const = default;
};

struct TemporalClustersGraph {
  std::vector<Cluster> clusters;
  std::vector<TcgEdge> edges;

  bool operator==(const TemporalClustersGraph&) const = default;
};

// Left cluster must start no later than the right one. Returns nothing when
// the hulls are disjoint without touching.
std::optional<AllenRelation> derive_relation(const Cluster& left, const Cluster& right,
                                             const VideoDocument& doc);

TemporalClustersGraph build_tcg(const TimeSpaceGraph& tsg, const VideoDocument& doc);

// Same graph with abstract entry/exit nodes attached: entry feeds clusters
// with no incoming edge, clusters with no outgoing edge drain into exit.
// Attachment edges carry frame delays from the document bounds.
struct TemporalDag {
  int cluster_count = 0;
  std::vector<TcgEdge> edges;
  std::vector<std::pair<int, Frame>> begin_edges;
  std::vector<std::pair<int, Frame>> end_edges;

  bool operator==(const TemporalDag&) const = default;
};

TemporalDag to_dag(const TemporalClustersGraph& tcg, const VideoDocument& doc);

std::string export_dot(const TemporalClustersGraph& tcg);
std::string export_dot(const TemporalDag& dag);

}  // namespace cineparse
