#include "cineparse/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "cineparse/errors.hpp"

namespace cineparse {

using nlohmann::json;
using nlohmann::ordered_json;

double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

namespace {

json parse_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::bad_input, std::string(what) + ": " + e.what());
  }
}

// Wraps field extraction so schema violations surface as validation errors.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(Errc::bad_input, std::string(what) + ": " + e.what());
  }
}

ordered_json span_json(const SequenceSpan& span) {
  return ordered_json{{"first_shot", span.first_shot}, {"last_shot", span.last_shot}};
}

SequenceSpan span_from(const json& j) {
  return {j.at("first_shot").get<int>(), j.at("last_shot").get<int>()};
}

ordered_json transition_json(const TransitionEffect& tr) {
  return ordered_json{{"kind", to_string(tr.kind)}, {"tau", tr.tau}};
}

TransitionEffect transition_from(const json& j) {
  TransitionEffect tr;
  tr.kind = transition_kind_from_string(j.at("kind").get<std::string>());
  tr.tau = j.at("tau").get<Frame>();
  return tr;
}

const char* to_string(GroupSide side) { return side == GroupSide::front ? "front" : "back"; }

GroupSide side_from_string(const std::string& name) {
  if (name == "front") return GroupSide::front;
  if (name == "back") return GroupSide::back;
  fail(Errc::bad_input, "unknown group side '" + name + "'");
}

}  // namespace

ManifestRecords parse_manifest_records(const std::string& text) {
  const json root = parse_text(text, "manifest");
  return guarded("manifest", [&] {
    ManifestRecords out;
    out.frame_rate = root.at("frame_rate").get<double>();
    if (root.contains("bins_per_channel")) out.bins_per_channel = root.at("bins_per_channel").get<int>();
    for (const auto& j : root.at("shots")) {
      ShotRecord rec;
      if (j.contains("id")) rec.id = j.at("id").get<int>();
      if (j.contains("t")) rec.t = j.at("t").get<Frame>();
      rec.td = j.at("td").get<Frame>();
      if (j.contains("transition")) rec.transition = transition_from(j.at("transition"));
      if (j.contains("keyframe")) rec.keyframe = j.at("keyframe").get<std::string>();
      if (j.contains("histogram")) rec.histogram = j.at("histogram").get<std::vector<std::uint32_t>>();
      out.records.push_back(std::move(rec));
    }
    return out;
  });
}

VideoDocument parse_manifest(const std::string& text) {
  const ManifestRecords raw = parse_manifest_records(text);
  return validate_manifest(raw.records, raw.frame_rate, raw.bins_per_channel);
}

std::string manifest_json(const VideoDocument& doc) {
  ordered_json root;
  root["frame_rate"] = round12(doc.frame_rate);
  if (doc.bins_per_channel > 0) root["bins_per_channel"] = doc.bins_per_channel;
  auto& shots = root["shots"] = ordered_json::array();
  for (const auto& s : doc.shots) {
    ordered_json j;
    j["id"] = s.id;
    j["td"] = s.td;
    if (s.transition) j["transition"] = transition_json(*s.transition);
    j["t"] = s.t;
    if (s.keyframe) j["keyframe"] = *s.keyframe;
    if (!s.histogram.empty()) j["histogram"] = s.histogram;
    shots.push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

std::string clusters_json(const TimeSpaceGraph& tsg) {
  ordered_json root;
  auto& clusters = root["clusters"] = ordered_json::array();
  for (const auto& c : tsg.clusters)
    clusters.push_back(ordered_json{{"id", c.id}, {"shots", c.shots}});
  return root.dump(2) + "\n";
}

std::string tcg_json(const TemporalClustersGraph& tcg) {
  ordered_json root;
  auto& edges = root["edges"] = ordered_json::array();
  for (const auto& e : tcg.edges) {
    edges.push_back(ordered_json{{"left", e.left},
                                 {"right", e.right},
                                 {"kind", to_string(e.relation.kind)},
                                 {"params", e.relation.params}});
  }
  return root.dump(2) + "\n";
}

std::string segmentation_json(const Segmentation& seg) {
  ordered_json root;
  auto& scenes = root["scenes"] = ordered_json::array();
  for (const auto& sc : seg.scenes) {
    scenes.push_back(ordered_json{{"id", sc.id},
                                  {"first_shot", sc.first_shot},
                                  {"last_shot", sc.last_shot},
                                  {"clusters", sc.clusters},
                                  {"one_shot", sc.one_shot}});
  }
  auto& sequences = root["sequences"] = ordered_json::array();
  for (const auto& span : seg.sequences) sequences.push_back(span_json(span));
  return root.dump(2) + "\n";
}

Segmentation parse_segmentation(const std::string& text) {
  const json root = parse_text(text, "segmentation");
  return guarded("segmentation", [&] {
    Segmentation seg;
    for (const auto& j : root.at("sequences")) seg.sequences.push_back(span_from(j));
    for (const auto& j : root.at("scenes")) {
      Scene sc;
      sc.id = j.at("id").get<int>();
      sc.first_shot = j.at("first_shot").get<int>();
      sc.last_shot = j.at("last_shot").get<int>();
      sc.clusters = j.at("clusters").get<std::vector<int>>();
      sc.one_shot = j.at("one_shot").get<bool>();
      for (std::size_t i = 0; i < seg.sequences.size(); ++i) {
        const auto& span = seg.sequences[i];
        if (sc.first_shot >= span.first_shot && sc.first_shot <= span.last_shot)
          sc.sequence = static_cast<int>(i);
      }
      seg.scenes.push_back(std::move(sc));
    }
    return seg;
  });
}

std::string trace_json(const std::vector<MergeEvent>& trace) {
  ordered_json root = ordered_json::array();
  for (const auto& e : trace) {
    root.push_back(ordered_json{{"pass", e.pass},
                                {"shot", e.shot},
                                {"absorbed_into", e.absorbed_into},
                                {"side", to_string(e.side)},
                                {"zscore", round12(e.zscore)}});
  }
  return root.dump(2) + "\n";
}

std::vector<MergeEvent> parse_trace(const std::string& text) {
  const json root = parse_text(text, "merge trace");
  return guarded("merge trace", [&] {
    std::vector<MergeEvent> trace;
    for (const auto& j : root) {
      MergeEvent e;
      e.pass = j.at("pass").get<int>();
      e.shot = j.at("shot").get<int>();
      e.absorbed_into = j.at("absorbed_into").get<int>();
      e.side = side_from_string(j.at("side").get<std::string>());
      e.zscore = j.at("zscore").get<double>();
      trace.push_back(e);
    }
    return trace;
  });
}

std::string ground_truth_json(const GroundTruth& truth) {
  ordered_json root;
  root["total_shots"] = truth.total_shots;
  auto& sequences = root["sequences"] = ordered_json::array();
  for (const auto& span : truth.sequences) sequences.push_back(span_json(span));
  auto& scenes = root["scenes"] = ordered_json::array();
  for (const auto& span : truth.scenes) scenes.push_back(span_json(span));
  auto& pre = root["pre_rhythm_scenes"] = ordered_json::array();
  for (const auto& span : truth.pre_rhythm_scenes) pre.push_back(span_json(span));
  auto& clusters = root["clusters"] = ordered_json::array();
  for (const auto& c : truth.clusters)
    clusters.push_back(ordered_json{{"id", c.id}, {"sequence", c.sequence}, {"shots", c.shots}});
  return root.dump(2) + "\n";
}

GroundTruth parse_ground_truth(const std::string& text) {
  const json root = parse_text(text, "ground truth");
  return guarded("ground truth", [&] {
    GroundTruth truth;
    truth.total_shots = root.at("total_shots").get<int>();
    for (const auto& j : root.at("sequences")) truth.sequences.push_back(span_from(j));
    for (const auto& j : root.at("scenes")) truth.scenes.push_back(span_from(j));
    for (const auto& j : root.at("pre_rhythm_scenes")) truth.pre_rhythm_scenes.push_back(span_from(j));
    for (const auto& j : root.at("clusters")) {
      Cluster c;
      c.id = j.at("id").get<int>();
      c.sequence = j.at("sequence").get<int>();
      c.shots = j.at("shots").get<std::vector<int>>();
      truth.clusters.push_back(std::move(c));
    }
    return truth;
  });
}

FixtureSpec parse_fixture_spec(const std::string& text) {
  const json root = parse_text(text, "fixture spec");
  return guarded("fixture spec", [&] {
    FixtureSpec spec;
    if (root.contains("seed")) spec.seed = root.at("seed").get<std::uint64_t>();
    if (root.contains("threshold")) spec.threshold = root.at("threshold").get<double>();
    if (root.contains("bins_per_channel")) spec.bins_per_channel = root.at("bins_per_channel").get<int>();
    if (root.contains("image_width")) spec.image_width = root.at("image_width").get<int>();
    if (root.contains("image_height")) spec.image_height = root.at("image_height").get<int>();
    if (root.contains("start_time")) spec.start_time = root.at("start_time").get<Frame>();
    for (const auto& jq : root.at("sequences")) {
      SequenceSpec seq;
      for (const auto& js : jq.at("scenes")) {
        SceneSpec sc;
        if (js.contains("shots")) sc.shots = js.at("shots").get<int>();
        if (js.contains("clusters")) sc.clusters = js.at("clusters").get<int>();
        if (js.contains("pattern")) sc.pattern = js.at("pattern").get<std::vector<int>>();
        if (js.contains("base_duration")) sc.base_duration = js.at("base_duration").get<Frame>();
        if (js.contains("sigma")) sc.sigma = js.at("sigma").get<double>();
        if (js.contains("durations")) sc.durations = js.at("durations").get<std::vector<Frame>>();
        seq.scenes.push_back(std::move(sc));
      }
      if (jq.contains("transition")) seq.transition = transition_from(jq.at("transition"));
      spec.sequences.push_back(std::move(seq));
    }
    return spec;
  });
}

std::string fixture_spec_json(const FixtureSpec& spec) {
  ordered_json root;
  root["seed"] = spec.seed;
  root["threshold"] = round12(spec.threshold);
  root["bins_per_channel"] = spec.bins_per_channel;
  root["image_width"] = spec.image_width;
  root["image_height"] = spec.image_height;
  root["start_time"] = spec.start_time;
  auto& sequences = root["sequences"] = ordered_json::array();
  for (const auto& seq : spec.sequences) {
    ordered_json jq;
    auto& scenes = jq["scenes"] = ordered_json::array();
    for (const auto& sc : seq.scenes) {
      ordered_json js;
      js["shots"] = sc.shots;
      js["clusters"] = sc.clusters;
      if (!sc.pattern.empty()) js["pattern"] = sc.pattern;
      js["base_duration"] = sc.base_duration;
      js["sigma"] = round12(sc.sigma);
      if (!sc.durations.empty()) js["durations"] = sc.durations;
      scenes.push_back(std::move(js));
    }
    if (seq.transition) jq["transition"] = transition_json(*seq.transition);
    sequences.push_back(std::move(jq));
  }
  return root.dump(2) + "\n";
}

std::vector<PointPattern> parse_patterns(const std::string& text) {
  const json root = parse_text(text, "pattern file");
  return guarded("pattern file", [&] {
    std::vector<std::pair<int, PointPattern>> rows;
    for (const auto& j : root) {
      PointPattern p;
      for (const auto& pt : j.at("points")) {
        if (!pt.is_array() || pt.size() != 2)
          fail(Errc::bad_input, "pattern file: points must be [x, y] pairs");
        p.points.emplace_back(pt.at(0).get<double>(), pt.at(1).get<double>());
      }
      rows.emplace_back(j.at("frame").get<int>(), std::move(p));
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (rows[i].first == rows[i - 1].first)
        fail(Errc::bad_input, "pattern file: duplicate frame " + std::to_string(rows[i].first));
    std::vector<PointPattern> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.push_back(std::move(r.second));
    return out;
  });
}

std::string patterns_json(const std::vector<PointPattern>& patterns) {
  ordered_json root = ordered_json::array();
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    ordered_json points = ordered_json::array();
    for (const auto& [x, y] : patterns[i].points)
      points.push_back(ordered_json::array({round12(x), round12(y)}));
    root.push_back(ordered_json{{"frame", static_cast<int>(i)}, {"points", std::move(points)}});
  }
  return root.dump(2) + "\n";
}

std::string eval_report_json(const EvalReport& report) {
  ordered_json root;
  root["precision"] = round12(report.precision);
  root["recall"] = round12(report.recall);
  root["f1"] = round12(report.f1);
  root["predicted_scenes"] = report.predicted_scenes;
  root["truth_scenes"] = report.truth_scenes;
  root["surviving_one_shot"] = report.surviving_one_shot;
  auto& scenes = root["scenes"] = ordered_json::array();
  for (const auto& diff : report.scene_diffs) {
    ordered_json j;
    j["predicted"] = diff.predicted ? ordered_json(span_json(*diff.predicted)) : ordered_json(nullptr);
    j["reference"] = diff.truth ? ordered_json(span_json(*diff.truth)) : ordered_json(nullptr);
    scenes.push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

std::string rhythm_report_json(const std::vector<ShotGroup>& groups, double alpha,
                               DeviationDenominator denom) {
  ordered_json root;
  root["alpha"] = round12(alpha);
  root["denominator"] = denom == DeviationDenominator::paper_n ? "PaperN" : "Unbiased";
  auto& out = root["groups"] = ordered_json::array();
  for (const auto& g : groups) {
    ordered_json j;
    j["first_shot"] = g.first_shot;
    j["last_shot"] = g.last_shot();
    j["durations"] = g.durations;
    if (g.size() >= 2) {
      const RhythmStats stats = rhythm_stats(g, denom);
      const SafeInterval band = safe_interval(stats, alpha);
      ordered_json vars = ordered_json::array();
      for (double v : stats.variations) vars.push_back(round12(v));
      j["variations"] = std::move(vars);
      j["mean_variation"] = round12(stats.mean_variation);
      j["deviation"] = round12(stats.deviation);
      j["safe_interval"] = ordered_json::array({round12(band.low), round12(band.high)});
    }
    out.push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::bad_input, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::bad_input, "cannot write '" + path + "'");
  out << text;
  if (!out.flush()) fail(Errc::bad_input, "write to '" + path + "' failed");
}

}  // namespace cineparse
