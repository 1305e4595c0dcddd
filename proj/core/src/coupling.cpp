#include "cineparse/coupling.hpp"

#include <algorithm>
#include <optional>

namespace cineparse {

namespace {

struct WorkScene {
  Scene scene;
  bool alive = true;
};

void merge_cluster_lists(std::vector<int>& into, const std::vector<int>& from) {
  into.insert(into.end(), from.begin(), from.end());
  std::sort(into.begin(), into.end());
}

Segmentation finalize(std::vector<WorkScene>& work, const std::vector<SequenceSpan>& sequences) {
  Segmentation out;
  out.sequences = sequences;
  for (WorkScene& ws : work)
    if (ws.alive) out.scenes.push_back(std::move(ws.scene));
  std::sort(out.scenes.begin(), out.scenes.end(),
            [](const Scene& a, const Scene& b) { return a.first_shot < b.first_shot; });
  for (std::size_t i = 0; i < out.scenes.size(); ++i) {
    out.scenes[i].id = static_cast<int>(i);
    out.scenes[i].one_shot = out.scenes[i].first_shot == out.scenes[i].last_shot;
  }
  return out;
}

}  // namespace

CouplingResult couple(const VideoDocument& doc, const Segmentation& initial, double alpha,
                      int min_group, DeviationDenominator denom) {
  if (alpha <= 0.0) fail(Errc::bad_input, "alpha must be positive");
  if (min_group < 3) fail(Errc::bad_input, "minimum group size must be at least three");

  std::vector<WorkScene> work;
  work.reserve(initial.scenes.size());
  for (const Scene& scene : initial.scenes) work.push_back({scene, true});

  CouplingResult result;
  bool changed = true;
  while (changed) {
    changed = false;

    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < work.size(); ++i)
      if (work[i].alive && work[i].scene.shot_count() == 1) pending.push_back(i);
    if (pending.empty()) break;
    std::sort(pending.begin(), pending.end(), [&](std::size_t a, std::size_t b) {
      return work[a].scene.first_shot > work[b].scene.first_shot;
    });
    ++result.passes;

    for (std::size_t index : pending) {
      if (!work[index].alive) continue;
      const Scene& orphan = work[index].scene;
      const int shot = orphan.first_shot;

      // The two neighbors a shot can rejoin; only grown scenes count.
      std::optional<std::size_t> preceding, following;
      for (std::size_t k = 0; k < work.size(); ++k) {
        if (!work[k].alive || k == index) continue;
        const Scene& scene = work[k].scene;
        if (scene.shot_count() < 2 || scene.sequence != orphan.sequence) continue;
        if (scene.last_shot + 1 == shot) preceding = k;
        if (scene.first_shot == shot + 1) following = k;
      }

      std::optional<std::size_t> best;
      GroupSide best_side = GroupSide::back;
      AggregationResult best_probe;
      auto consider = [&](std::optional<std::size_t> cand, GroupSide side) {
        if (!cand) return;
        const Scene& scene = work[*cand].scene;
        const ShotGroup group = make_group(doc, scene.first_shot, scene.last_shot);
        const AggregationResult probe =
            aggregation_test(group, doc.shots[shot], alpha, side, denom);
        if (!probe.accepted) return;
        if (!best || probe.zscore < best_probe.zscore) {
          best = cand;
          best_side = side;
          best_probe = probe;
        }
      };
      consider(preceding, GroupSide::back);   // wins exact ties by being first
      consider(following, GroupSide::front);

      if (!best) continue;
      Scene& host = work[*best].scene;
      host.first_shot = std::min(host.first_shot, shot);
      host.last_shot = std::max(host.last_shot, shot);
      merge_cluster_lists(host.clusters, orphan.clusters);
      work[index].alive = false;
      changed = true;
      result.trace.push_back({result.passes, shot, host.id, best_side, best_probe.zscore});
    }
  }

  result.segmentation = finalize(work, initial.sequences);
  return result;
}

Segmentation resolve_residuals(const VideoDocument& doc, const Segmentation& seg, int min_group,
                               double alpha, DeviationDenominator denom) {
  Segmentation out;
  out.sequences = seg.sequences;

  std::size_t i = 0;
  while (i < seg.scenes.size()) {
    // Extend a run of adjacent surviving one-shot scenes within one sequence.
    std::size_t j = i;
    while (j < seg.scenes.size() && seg.scenes[j].one_shot &&
           seg.scenes[j].sequence == seg.scenes[i].sequence &&
           (j == i || seg.scenes[j - 1].last_shot + 1 == seg.scenes[j].first_shot))
      ++j;

    const std::size_t run = j - i;
    if (run > 2) {
      const int first = seg.scenes[i].first_shot;
      const int last = seg.scenes[j - 1].last_shot;
      for (const ShotGroup& group : rhythm_segment(doc, first, last, min_group, alpha, denom)) {
        Scene scene;
        scene.first_shot = group.first_shot;
        scene.last_shot = group.last_shot();
        scene.sequence = seg.scenes[i].sequence;
        for (std::size_t k = i; k < j; ++k) {
          const Scene& source = seg.scenes[k];
          if (source.first_shot >= scene.first_shot && source.last_shot <= scene.last_shot)
            merge_cluster_lists(scene.clusters, source.clusters);
        }
        out.scenes.push_back(std::move(scene));
      }
      i = j;
    } else if (run >= 1) {
      for (std::size_t k = i; k < j; ++k) out.scenes.push_back(seg.scenes[k]);
      i = j;
    } else {
      out.scenes.push_back(seg.scenes[i]);
      ++i;
    }
  }

  for (std::size_t k = 0; k < out.scenes.size(); ++k) {
    out.scenes[k].id = static_cast<int>(k);
    out.scenes[k].one_shot = out.scenes[k].first_shot == out.scenes[k].last_shot;
  }
  return out;
}

PipelineResult segment_full(const VideoDocument& doc, const PipelineOptions& options) {
  PipelineResult result;
  result.initial = segment_spatial_temporal(doc, options.threshold);
  CouplingResult coupled =
      couple(doc, result.initial, options.alpha, options.min_group, options.denominator);
  result.trace = std::move(coupled.trace);
  result.passes = coupled.passes;
  result.coupled = resolve_residuals(doc, coupled.segmentation, options.min_group, options.alpha,
                                     options.denominator);
  return result;
}

}  // namespace cineparse
