#include "cineparse/synth.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cineparse/random.hpp"

namespace cineparse {

namespace {

[[noreturn]] void unrealizable(const std::string& why) { fail(Errc::unrealizable_spec, why); }

std::vector<int> default_pattern(int shots, int clusters) {
  if (clusters == 1) return std::vector<int>(shots, 0);
  if (shots < clusters + 1)
    unrealizable("a scene with " + std::to_string(clusters) +
                 " interleaved clusters needs at least " + std::to_string(clusters + 1) + " shots");
  // Cluster 0 brackets the scene so every other cluster nests inside its hull.
  std::vector<int> pattern(shots, 0);
  const int inner = shots - 2;
  const int groups = clusters - 1;
  int position = 1;
  for (int g = 0; g < groups; ++g) {
    const int size = inner / groups + (g < inner % groups ? 1 : 0);
    for (int k = 0; k < size; ++k) pattern[position++] = g + 1;
  }
  return pattern;
}

void check_pattern(const std::vector<int>& pattern, int shots, int clusters) {
  if (static_cast<int>(pattern.size()) != shots)
    unrealizable("pattern length does not match the shot count");
  int seen = 0;
  for (int c : pattern) {
    if (c < 0 || c >= clusters) unrealizable("pattern references a cluster outside the scene");
    if (c > seen) unrealizable("pattern clusters must appear in first-use order");
    if (c == seen) ++seen;
  }
  if (seen != clusters) unrealizable("pattern leaves clusters empty");
}

}  // namespace

std::pair<VideoDocument, GroundTruth> synthesize(const FixtureSpec& spec) {
  if (spec.sequences.empty()) unrealizable("fixture needs at least one sequence");
  if (spec.threshold <= 0.0 || spec.threshold > 2.0 / 3.0)
    unrealizable("histogram plan supports thresholds in (0, 2/3] only");
  if (spec.bins_per_channel < 2 || spec.bins_per_channel > 256)
    unrealizable("bins per channel out of range");
  if (spec.image_width < 1 || spec.image_height < 1) unrealizable("empty key frame geometry");
  if (spec.start_time < 0) unrealizable("negative start time");

  const std::size_t b = static_cast<std::size_t>(spec.bins_per_channel);
  const std::size_t bin_count = b * b * b;
  const std::int64_t pixels =
      static_cast<std::int64_t>(spec.image_width) * spec.image_height;

  std::size_t total_clusters = 0;
  for (const SequenceSpec& seq : spec.sequences) {
    if (seq.scenes.empty()) unrealizable("sequence without scenes");
    for (const SceneSpec& scene : seq.scenes) {
      if (scene.shots < 1) unrealizable("scene without shots");
      if (scene.clusters < 1 || scene.clusters > scene.shots)
        unrealizable("cluster count must lie in [1, shots]");
      total_clusters += static_cast<std::size_t>(scene.clusters);
    }
  }
  // Last bin is reserved for jitter noise; every cluster needs its own bin.
  if (total_clusters > bin_count - 1)
    unrealizable("not enough color bins for " + std::to_string(total_clusters) + " clusters");

  const std::int64_t jitter_cap =
      static_cast<std::int64_t>(spec.threshold * static_cast<double>(pixels) / 2.0);

  StableRng rng(spec.seed);
  VideoDocument doc;
  doc.bins_per_channel = spec.bins_per_channel;
  GroundTruth truth;

  int next_cluster = 0;
  for (std::size_t s = 0; s < spec.sequences.size(); ++s) {
    const SequenceSpec& seq = spec.sequences[s];
    const bool last_sequence = s + 1 == spec.sequences.size();
    if (last_sequence && seq.transition) unrealizable("last sequence cannot carry a transition");
    if (seq.transition && seq.transition->kind == TransitionKind::cut)
      unrealizable("sequence breaks need a gradual transition");

    const int sequence_first = static_cast<int>(doc.shots.size());
    for (const SceneSpec& scene : seq.scenes) {
      std::vector<int> pattern = scene.pattern;
      if (pattern.empty())
        pattern = default_pattern(scene.shots, scene.clusters);
      else
        check_pattern(pattern, scene.shots, scene.clusters);

      std::vector<Frame> durations = scene.durations;
      if (durations.empty()) {
        if (scene.base_duration < 1) unrealizable("base duration must be at least one frame");
        if (scene.sigma < 0.0) unrealizable("negative sigma");
        for (int i = 0; i < scene.shots; ++i) {
          const Frame td = scene.sigma == 0.0
                               ? scene.base_duration
                               : std::max<Frame>(1, scene.base_duration +
                                                        rng.normal_int(0.0, scene.sigma));
          durations.push_back(td);
        }
      } else if (static_cast<int>(durations.size()) != scene.shots) {
        unrealizable("explicit durations do not match the shot count");
      } else {
        for (Frame td : durations)
          if (td < 1) unrealizable("explicit durations must be positive");
      }

      const int scene_first = static_cast<int>(doc.shots.size());
      for (int i = 0; i < scene.shots; ++i) {
        const int cluster_id = next_cluster + pattern[i];
        const std::int64_t jitter = jitter_cap > 0 ? rng.uniform_int(0, jitter_cap) : 0;

        Shot shot;
        shot.id = static_cast<int>(doc.shots.size());
        shot.td = durations[i];
        shot.transition = TransitionEffect{};  // fixed up below
        shot.histogram.assign(bin_count, 0);
        shot.histogram[static_cast<std::size_t>(cluster_id)] =
            static_cast<std::uint32_t>(pixels - jitter);
        shot.histogram[bin_count - 1] += static_cast<std::uint32_t>(jitter);
        doc.shots.push_back(std::move(shot));

        if (static_cast<int>(truth.clusters.size()) <= cluster_id) {
          Cluster cluster;
          cluster.id = cluster_id;
          cluster.sequence = static_cast<int>(s);
          truth.clusters.push_back(std::move(cluster));
        }
        truth.clusters[cluster_id].shots.push_back(shot.id);
      }
      truth.scenes.push_back({scene_first, static_cast<int>(doc.shots.size()) - 1});
      next_cluster += scene.clusters;
    }

    const int sequence_last = static_cast<int>(doc.shots.size()) - 1;
    truth.sequences.push_back({sequence_first, sequence_last});
    if (!last_sequence)
      doc.shots.back().transition = seq.transition.value_or(
          TransitionEffect{TransitionKind::dissolve, 30});
  }
  doc.shots.back().transition.reset();

  // Chain the time codes.
  Frame running = spec.start_time;
  for (Shot& shot : doc.shots) {
    shot.t = running;
    running += shot.td + (shot.transition ? shot.transition->tau : 0);
  }
  truth.total_shots = static_cast<int>(doc.shots.size());

  // Pre-rhythm scenes: clusters of one sequence whose hulls intersect chain
  // into one scene; hulls that merely touch stay apart.
  for (const SequenceSpan& seq_span : truth.sequences) {
    std::vector<const Cluster*> members;
    for (const Cluster& cluster : truth.clusters)
      if (cluster.shots.front() >= seq_span.first_shot &&
          cluster.shots.back() <= seq_span.last_shot)
        members.push_back(&cluster);

    std::vector<std::size_t> parent(members.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Frame start_i = doc.shots[members[i]->shots.front()].t;
        const Frame end_i = doc.shots[members[i]->shots.back()].end();
        const Frame start_j = doc.shots[members[j]->shots.front()].t;
        const Frame end_j = doc.shots[members[j]->shots.back()].end();
        if (std::max(start_i, start_j) < std::min(end_i, end_j)) parent[find(i)] = find(j);
      }
    }
    std::vector<SequenceSpan> components;
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::size_t root = find(i);
      auto it = std::find(roots.begin(), roots.end(), root);
      std::size_t slot;
      if (it == roots.end()) {
        roots.push_back(root);
        components.push_back({members[i]->shots.front(), members[i]->shots.back()});
        slot = roots.size() - 1;
      } else {
        slot = static_cast<std::size_t>(it - roots.begin());
      }
      components[slot].first_shot = std::min(components[slot].first_shot, members[i]->shots.front());
      components[slot].last_shot = std::max(components[slot].last_shot, members[i]->shots.back());
    }
    std::sort(components.begin(), components.end(),
              [](const SequenceSpan& a, const SequenceSpan& b) {
                return a.first_shot < b.first_shot;
              });
    truth.pre_rhythm_scenes.insert(truth.pre_rhythm_scenes.end(), components.begin(),
                                   components.end());
  }

  return {std::move(doc), std::move(truth)};
}

Image render_keyframe(const Histogram& histogram, int width, int height) {
  const std::int64_t pixels = static_cast<std::int64_t>(width) * height;
  if (histogram.total() != static_cast<std::uint64_t>(pixels))
    fail(Errc::bad_input, "histogram total does not match the frame geometry");
  const std::size_t b = static_cast<std::size_t>(histogram.bins_per_channel);

  Image img;
  img.width = width;
  img.height = height;
  img.pixels.reserve(static_cast<std::size_t>(pixels) * 3);
  for (std::size_t bin = 0; bin < histogram.bins.size(); ++bin) {
    if (histogram.bins[bin] == 0) continue;
    // Smallest channel values that quantize back into this bin.
    const std::size_t qr = bin / (b * b);
    const std::size_t qg = bin / b % b;
    const std::size_t qb = bin % b;
    const auto value = [&](std::size_t q) {
      return static_cast<std::uint8_t>((q * 256 + b - 1) / b);
    };
    for (std::uint32_t k = 0; k < histogram.bins[bin]; ++k) {
      img.pixels.push_back(value(qr));
      img.pixels.push_back(value(qg));
      img.pixels.push_back(value(qb));
    }
  }
  return img;
}

}  // namespace cineparse
