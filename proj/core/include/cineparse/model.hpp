#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cineparse/errors.hpp"

namespace cineparse {

using Frame = std::int64_t;

enum class TransitionKind { cut, dissolve, fade_in, fade_out };

const char* to_string(TransitionKind kind);
TransitionKind transition_kind_from_string(const std::string& name);

// Effect linking a shot to its successor. Abrupt cuts consume no frames;
// gradual effects occupy tau frames between the two shots.
struct TransitionEffect {
  TransitionKind kind = TransitionKind::cut;
  Frame tau = 0;

  bool operator==(const TransitionEffect&) const = default;
};

struct Shot {
  int id = 0;
  Frame t = 0;       // first frame
  Frame td = 1;      // duration in frames
  std::optional<TransitionEffect> transition;  // absent on the last shot
  std::optional<std::string> keyframe;         // image path, relative to the manifest
  std::vector<std::uint32_t> histogram;        // empty until computed or supplied

  Frame end() const { return t + td; }
  bool operator==(const Shot&) const = default;
};

// Raw manifest row before validation. Fields mirror the JSON shape.
struct ShotRecord {
  std::optional<int> id;
  std::optional<Frame> t;
  Frame td = 0;
  std::optional<TransitionEffect> transition;
  std::optional<std::string> keyframe;
  std::vector<std::uint32_t> histogram;
};

struct VideoDocument {
  double frame_rate = 25.0;
  int bins_per_channel = 0;  // declared layout of attached histograms, 0 if none
  std::vector<Shot> shots;

  bool operator==(const VideoDocument&) const = default;
};

// Maximal run of shots linked by cuts only; a gradual transition ends it.
struct SequenceSpan {
  int first_shot = 0;
  int last_shot = 0;

  bool operator==(const SequenceSpan&) const = default;
};

// Checks the timeline chain t[i+1] == t[i] + td[i] + tau[i], fills in missing
// time codes and ids, and rejects inconsistent records outright.
VideoDocument validate_manifest(const std::vector<ShotRecord>& records, double frame_rate = 25.0,
                                int bins_per_channel = 0);

std::vector<SequenceSpan> sequence_boundaries(const VideoDocument& doc);

// Index of the sequence containing each shot, aligned with doc.shots.
std::vector<int> sequence_index(const VideoDocument& doc);

}  // namespace cineparse
