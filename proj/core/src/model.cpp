#include "cineparse/model.hpp"

#include <string>

namespace cineparse {

const char* to_string(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::cut: return "cut";
    case TransitionKind::dissolve: return "dissolve";
    case TransitionKind::fade_in: return "fade-in";
    case TransitionKind::fade_out: return "fade-out";
  }
  return "cut";
}

TransitionKind transition_kind_from_string(const std::string& name) {
  if (name == "cut") return TransitionKind::cut;
  if (name == "dissolve") return TransitionKind::dissolve;
  if (name == "fade-in") return TransitionKind::fade_in;
  if (name == "fade-out") return TransitionKind::fade_out;
  fail(Errc::bad_input, "unknown transition kind: " + name);
}

namespace {

// Histogram arrays must all share one b*b*b layout; infer b when undeclared.
int resolve_bin_layout(const std::vector<ShotRecord>& records, int declared) {
  int b = declared;
  for (const ShotRecord& rec : records) {
    if (rec.histogram.empty()) continue;
    if (b == 0) {
      const std::size_t n = rec.histogram.size();
      while (static_cast<std::size_t>(b + 1) * (b + 1) * (b + 1) <= n) ++b;
      if (static_cast<std::size_t>(b) * b * b != n || b < 2 || b > 256)
        fail(Errc::layout_mismatch,
             "histogram length " + std::to_string(n) + " is not a usable per-channel cube");
    }
    if (rec.histogram.size() != static_cast<std::size_t>(b) * b * b)
      fail(Errc::layout_mismatch, "histogram arrays disagree on bin layout");
  }
  return b;
}

}  // namespace

VideoDocument validate_manifest(const std::vector<ShotRecord>& records, double frame_rate,
                                int bins_per_channel) {
  if (records.empty()) fail(Errc::empty_manifest, "manifest contains no shots");
  if (bins_per_channel != 0 && (bins_per_channel < 2 || bins_per_channel > 256))
    fail(Errc::invalid_bin_count, "declared bins per channel out of range");

  VideoDocument doc;
  doc.frame_rate = frame_rate;
  doc.bins_per_channel = resolve_bin_layout(records, bins_per_channel);
  doc.shots.reserve(records.size());

  Frame running = records.front().t.value_or(0);
  if (running < 0) fail(Errc::non_contiguous_timeline, "shot 0 starts before frame 0");

  for (std::size_t i = 0; i < records.size(); ++i) {
    const ShotRecord& rec = records[i];
    const int expect_id = static_cast<int>(i);
    if (rec.id && *rec.id != expect_id)
      fail(Errc::bad_input, "shot ids must be consecutive from 0; got " + std::to_string(*rec.id) +
                                " at position " + std::to_string(i));
    if (rec.td <= 0)
      fail(Errc::negative_duration,
           "shot " + std::to_string(expect_id) + " has non-positive duration");
    if (rec.t && *rec.t != running)
      fail(Errc::non_contiguous_timeline,
           "shot " + std::to_string(expect_id) + " starts at frame " + std::to_string(*rec.t) +
               ", expected " + std::to_string(running));

    const bool last = i + 1 == records.size();
    if (last && rec.transition)
      fail(Errc::bad_input, "last shot must not carry a transition");
    if (rec.transition) {
      const TransitionEffect& tr = *rec.transition;
      const bool is_cut = tr.kind == TransitionKind::cut;
      if (is_cut != (tr.tau == 0))
        fail(Errc::bad_input, "shot " + std::to_string(expect_id) +
                                  ": cut transitions take zero frames, gradual ones at least one");
      if (tr.tau < 0)
        fail(Errc::bad_input, "shot " + std::to_string(expect_id) + ": negative transition length");
    }
    if (!last && !rec.transition)
      fail(Errc::bad_input, "shot " + std::to_string(expect_id) + " is missing its transition");

    Shot shot;
    shot.id = expect_id;
    shot.t = running;
    shot.td = rec.td;
    shot.transition = rec.transition;
    shot.keyframe = rec.keyframe;
    shot.histogram = rec.histogram;
    doc.shots.push_back(std::move(shot));

    running += rec.td + (rec.transition ? rec.transition->tau : 0);
  }
  return doc;
}

std::vector<SequenceSpan> sequence_boundaries(const VideoDocument& doc) {
  std::vector<SequenceSpan> spans;
  int first = 0;
  for (std::size_t i = 0; i < doc.shots.size(); ++i) {
    const Shot& shot = doc.shots[i];
    const bool breaks = shot.transition && shot.transition->kind != TransitionKind::cut;
    if (breaks || i + 1 == doc.shots.size()) {
      spans.push_back({first, shot.id});
      first = shot.id + 1;
    }
  }
  return spans;
}

std::vector<int> sequence_index(const VideoDocument& doc) {
  std::vector<int> index(doc.shots.size(), 0);
  int seq = 0;
  for (std::size_t i = 0; i < doc.shots.size(); ++i) {
    index[i] = seq;
    const Shot& shot = doc.shots[i];
    if (shot.transition && shot.transition->kind != TransitionKind::cut) ++seq;
  }
  return index;
}

}  // namespace cineparse
