#include "cineparse/clustering.hpp"

#include <sstream>

namespace cineparse {

namespace {

Histogram shot_histogram(const VideoDocument& doc, int shot_id) {
  const Shot& shot = doc.shots[shot_id];
  if (shot.histogram.empty())
    fail(Errc::missing_histogram, "shot " + std::to_string(shot_id) + " has no histogram");
  return Histogram{doc.bins_per_channel, shot.histogram};
}

}  // namespace

std::vector<Cluster> cluster_sequence(const VideoDocument& doc, const SequenceSpan& span,
                                      double threshold) {
  std::vector<Cluster> clusters;
  const int n = span.last_shot - span.first_shot + 1;
  std::vector<bool> classified(n, false);

  for (int i = 0; i < n; ++i) {
    if (classified[i]) continue;
    const int seed_id = span.first_shot + i;
    const Histogram seed = shot_histogram(doc, seed_id);

    Cluster cluster;
    cluster.shots.push_back(seed_id);
    classified[i] = true;
    for (int j = i + 1; j < n; ++j) {
      if (classified[j]) continue;
      const int candidate_id = span.first_shot + j;
      if (dissimilarity(seed, shot_histogram(doc, candidate_id)) < threshold) {
        cluster.shots.push_back(candidate_id);
        classified[j] = true;
      }
    }
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

TimeSpaceGraph cluster_document(const VideoDocument& doc, double threshold) {
  TimeSpaceGraph tsg;
  tsg.cluster_of_shot.assign(doc.shots.size(), -1);

  const std::vector<SequenceSpan> spans = sequence_boundaries(doc);
  for (std::size_t s = 0; s < spans.size(); ++s) {
    for (Cluster& cluster : cluster_sequence(doc, spans[s], threshold)) {
      cluster.id = static_cast<int>(tsg.clusters.size());
      cluster.sequence = static_cast<int>(s);
      for (int shot : cluster.shots) tsg.cluster_of_shot[shot] = cluster.id;
      tsg.clusters.push_back(std::move(cluster));
    }
  }
  return tsg;
}

std::string export_timeline(const TimeSpaceGraph& tsg, const VideoDocument& doc) {
  std::ostringstream out;
  for (const Cluster& cluster : tsg.clusters) {
    out << "C" << cluster.id;
    for (int pad = cluster.id < 10 ? 2 : (cluster.id < 100 ? 1 : 0); pad > 0; --pad) out << ' ';
    out << " |";
    std::size_t next = 0;
    for (const Shot& shot : doc.shots) {
      const bool member = next < cluster.shots.size() && cluster.shots[next] == shot.id;
      if (member) ++next;
      out << (member ? '#' : '.');
    }
    out << "|\n";
  }
  return out.str();
}

}  // namespace cineparse
