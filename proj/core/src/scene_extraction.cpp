#include "cineparse/scene_extraction.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cineparse {

std::vector<TemporalClustersGraph> split_sequences(const TemporalClustersGraph& tcg) {
  std::map<int, TemporalClustersGraph> by_sequence;
  std::map<int, int> sequence_of;
  for (const Cluster& cluster : tcg.clusters) {
    by_sequence[cluster.sequence].clusters.push_back(cluster);
    sequence_of[cluster.id] = cluster.sequence;
  }
  for (const TcgEdge& edge : tcg.edges) {
    if (edge.relation.kind == RelationKind::before) continue;
    by_sequence[sequence_of.at(edge.left)].edges.push_back(edge);
  }

  std::vector<TemporalClustersGraph> subgraphs;
  subgraphs.reserve(by_sequence.size());
  for (auto& [seq, graph] : by_sequence) subgraphs.push_back(std::move(graph));
  return subgraphs;
}

std::vector<Scene> extract_scenes(const TemporalClustersGraph& subgraph, const VideoDocument&) {
  // Union-find over local cluster indices, merged along during/overlaps edges.
  const std::size_t n = subgraph.clusters.size();
  std::map<int, std::size_t> local;
  for (std::size_t i = 0; i < n; ++i) local[subgraph.clusters[i].id] = i;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const TcgEdge& edge : subgraph.edges) {
    if (edge.relation.kind != RelationKind::during && edge.relation.kind != RelationKind::overlaps)
      continue;
    parent[find(local.at(edge.left))] = find(local.at(edge.right));
  }

  std::map<std::size_t, Scene> components;
  for (std::size_t i = 0; i < n; ++i) {
    const Cluster& cluster = subgraph.clusters[i];
    Scene& scene = components[find(i)];
    if (scene.clusters.empty()) {
      scene.first_shot = cluster.shots.front();
      scene.last_shot = cluster.shots.back();
      scene.sequence = cluster.sequence;
    } else {
      scene.first_shot = std::min(scene.first_shot, cluster.shots.front());
      scene.last_shot = std::max(scene.last_shot, cluster.shots.back());
    }
    scene.clusters.push_back(cluster.id);
  }

  std::vector<Scene> scenes;
  scenes.reserve(components.size());
  for (auto& [root, scene] : components) {
    std::sort(scene.clusters.begin(), scene.clusters.end());
    scene.one_shot = scene.first_shot == scene.last_shot;
    scenes.push_back(std::move(scene));
  }
  std::sort(scenes.begin(), scenes.end(),
            [](const Scene& a, const Scene& b) { return a.first_shot < b.first_shot; });

  // Every shot inside a scene's hull must belong to one of its clusters.
  for (const Scene& scene : scenes) {
    std::size_t member_count = 0;
    for (int cluster_id : scene.clusters)
      member_count += subgraph.clusters[local.at(cluster_id)].shots.size();
    if (member_count != static_cast<std::size_t>(scene.shot_count()))
      fail(Errc::non_contiguous_scene,
           "scene hull covers shots outside its clusters; upstream graph is inconsistent");
  }
  return scenes;
}

Segmentation segment_spatial_temporal(const VideoDocument& doc, double threshold) {
  const TimeSpaceGraph tsg = cluster_document(doc, threshold);
  const TemporalClustersGraph tcg = build_tcg(tsg, doc);

  Segmentation seg;
  seg.sequences = sequence_boundaries(doc);
  for (const TemporalClustersGraph& subgraph : split_sequences(tcg)) {
    for (Scene& scene : extract_scenes(subgraph, doc)) {
      scene.id = static_cast<int>(seg.scenes.size());
      seg.scenes.push_back(std::move(scene));
    }
  }
  return seg;
}

}  // namespace cineparse
