#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cineparse/clustering.hpp"
#include "cineparse/coupling.hpp"
#include "cineparse/errors.hpp"
#include "cineparse/evaluation.hpp"
#include "cineparse/foe_match.hpp"
#include "cineparse/histogram.hpp"
#include "cineparse/json_io.hpp"
#include "cineparse/log.hpp"
#include "cineparse/model.hpp"
#include "cineparse/rhythm.hpp"
#include "cineparse/scene_extraction.hpp"
#include "cineparse/synth.hpp"
#include "cineparse/temporal_graph.hpp"

namespace fs = std::filesystem;

namespace {

using namespace cineparse;

struct PipelineFlags {
  double threshold = 0.1;
  double alpha = 2.25;
  int min_group = 3;
  int bins = 4;
  std::string denominator = "PaperN";

  DeviationDenominator denom() const {
    return denominator == "Unbiased" ? DeviationDenominator::unbiased
                                     : DeviationDenominator::paper_n;
  }

  PipelineOptions options() const {
    return {threshold, alpha, min_group, bins, denom()};
  }
};

void add_cluster_flags(CLI::App* cmd, PipelineFlags& f) {
  cmd->add_option("--threshold", f.threshold, "histogram dissimilarity cut for clustering");
  cmd->add_option("--bins", f.bins, "histogram bins per channel for key frames");
}

void add_rhythm_flags(CLI::App* cmd, PipelineFlags& f) {
  cmd->add_option("--alpha", f.alpha, "safe interval half-width in deviations");
  cmd->add_option("--min-group", f.min_group, "minimum rhythm group size");
  cmd->add_option("--denominator", f.denominator, "variation statistics denominator")
      ->check(CLI::IsMember({"PaperN", "Unbiased"}));
}

// Shots that reference a key frame but carry no histogram get one computed
// from the image, relative to the manifest's directory.
VideoDocument load_document(const std::string& manifest_path, int bins) {
  const ManifestRecords raw = parse_manifest_records(read_text_file(manifest_path));
  VideoDocument doc = validate_manifest(raw.records, raw.frame_rate, raw.bins_per_channel);

  const fs::path base = fs::path(manifest_path).parent_path();
  bool computed = false;
  for (Shot& shot : doc.shots) {
    if (!shot.histogram.empty() || !shot.keyframe) continue;
    const int use_bins = doc.bins_per_channel > 0 ? doc.bins_per_channel : bins;
    const Image img = read_ppm_file((base / *shot.keyframe).string());
    shot.histogram = compute_histogram(img, use_bins).bins;
    computed = true;
  }
  if (computed && doc.bins_per_channel == 0) doc.bins_per_channel = bins;
  if (computed) log_info("computed key frame histograms for " + manifest_path);
  return doc;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_text_file(path, text);
    log_info("wrote " + path);
  }
}

int run_app(int argc, char** argv) {
  CLI::App app{"deterministic shot clustering and scene segmentation toolkit"};
  app.require_subcommand(1);

  // ---- segment ----
  auto* segment = app.add_subcommand("segment", "run the full pipeline on a shot manifest");
  PipelineFlags seg_flags;
  std::string seg_manifest, seg_out, seg_initial_out, seg_trace_out, seg_stage = "full";
  segment->add_option("--manifest", seg_manifest, "shot manifest JSON")->required();
  segment->add_option("--out", seg_out, "output path (stdout when omitted)");
  segment->add_option("--initial-out", seg_initial_out, "pre-coupling segmentation JSON path");
  segment->add_option("--trace-out", seg_trace_out, "merge trace JSON path");
  segment->add_option("--stage", seg_stage, "stop after an earlier stage")
      ->check(CLI::IsMember({"clusters", "tcg", "initial", "full"}));
  add_cluster_flags(segment, seg_flags);
  add_rhythm_flags(segment, seg_flags);
  segment->callback([&] {
    const VideoDocument doc = load_document(seg_manifest, seg_flags.bins);
    if (seg_stage == "clusters") {
      emit(seg_out, clusters_json(cluster_document(doc, seg_flags.threshold)));
      return;
    }
    if (seg_stage == "tcg") {
      const TimeSpaceGraph tsg = cluster_document(doc, seg_flags.threshold);
      emit(seg_out, tcg_json(build_tcg(tsg, doc)));
      return;
    }
    if (seg_stage == "initial") {
      emit(seg_out, segmentation_json(segment_spatial_temporal(doc, seg_flags.threshold)));
      return;
    }
    const PipelineResult result = segment_full(doc, seg_flags.options());
    emit(seg_out, segmentation_json(result.coupled));
    if (!seg_initial_out.empty()) emit(seg_initial_out, segmentation_json(result.initial));
    if (!seg_trace_out.empty()) emit(seg_trace_out, trace_json(result.trace));
    if (!seg_out.empty())
      std::cout << "scenes " << result.initial.scenes.size() << " -> "
                << result.coupled.scenes.size() << " after " << result.passes
                << (result.passes == 1 ? " pass\n" : " passes\n");
  });

  // ---- cluster ----
  auto* cluster = app.add_subcommand("cluster", "group visually similar shots per sequence");
  PipelineFlags cl_flags;
  std::string cl_manifest, cl_out, cl_timeline;
  cluster->add_option("--manifest", cl_manifest, "shot manifest JSON")->required();
  cluster->add_option("--out", cl_out, "clusters JSON path (stdout when omitted)");
  cluster->add_option("--timeline", cl_timeline, "plain-text time line path");
  add_cluster_flags(cluster, cl_flags);
  cluster->callback([&] {
    const VideoDocument doc = load_document(cl_manifest, cl_flags.bins);
    const TimeSpaceGraph tsg = cluster_document(doc, cl_flags.threshold);
    emit(cl_out, clusters_json(tsg));
    if (!cl_timeline.empty()) emit(cl_timeline, export_timeline(tsg, doc));
  });

  // ---- tcg ----
  auto* tcg_cmd = app.add_subcommand("tcg", "derive temporal relations between clusters");
  PipelineFlags tcg_flags;
  std::string tcg_manifest, tcg_out, tcg_dot, tcg_dag_dot;
  tcg_cmd->add_option("--manifest", tcg_manifest, "shot manifest JSON")->required();
  tcg_cmd->add_option("--out", tcg_out, "relation edges JSON path");
  tcg_cmd->add_option("--dot", tcg_dot, "graph DOT path");
  tcg_cmd->add_option("--dag-dot", tcg_dag_dot, "entry/exit DAG DOT path");
  add_cluster_flags(tcg_cmd, tcg_flags);
  tcg_cmd->callback([&] {
    const VideoDocument doc = load_document(tcg_manifest, tcg_flags.bins);
    const TimeSpaceGraph tsg = cluster_document(doc, tcg_flags.threshold);
    const TemporalClustersGraph graph = build_tcg(tsg, doc);
    if (tcg_out.empty() && tcg_dot.empty() && tcg_dag_dot.empty()) {
      emit("", tcg_json(graph));
      return;
    }
    if (!tcg_out.empty()) emit(tcg_out, tcg_json(graph));
    if (!tcg_dot.empty()) emit(tcg_dot, export_dot(graph));
    if (!tcg_dag_dot.empty()) emit(tcg_dag_dot, export_dot(to_dag(graph, doc)));
  });

  // ---- rhythm ----
  auto* rhythm = app.add_subcommand("rhythm", "segment each sequence by editing rhythm alone");
  PipelineFlags rh_flags;
  std::string rh_manifest, rh_out;
  rhythm->add_option("--manifest", rh_manifest, "shot manifest JSON")->required();
  rhythm->add_option("--out", rh_out, "rhythm groups JSON path (stdout when omitted)");
  add_rhythm_flags(rhythm, rh_flags);
  rhythm->callback([&] {
    const VideoDocument doc = load_document(rh_manifest, rh_flags.bins);
    std::vector<ShotGroup> groups;
    for (const SequenceSpan& span : sequence_boundaries(doc)) {
      for (ShotGroup& group : rhythm_segment(doc, span.first_shot, span.last_shot,
                                             rh_flags.min_group, rh_flags.alpha, rh_flags.denom()))
        groups.push_back(std::move(group));
    }
    emit(rh_out, rhythm_report_json(groups, rh_flags.alpha, rh_flags.denom()));
  });

  // ---- couple ----
  auto* couple_cmd = app.add_subcommand("couple", "absorb one-shot scenes by rhythm");
  PipelineFlags cp_flags;
  std::string cp_manifest, cp_initial, cp_out, cp_trace_out;
  couple_cmd->add_option("--manifest", cp_manifest, "shot manifest JSON")->required();
  couple_cmd->add_option("--initial", cp_initial,
                         "segmentation JSON to refine (recomputed when omitted)");
  couple_cmd->add_option("--out", cp_out, "refined segmentation JSON path");
  couple_cmd->add_option("--trace-out", cp_trace_out, "merge trace JSON path");
  add_cluster_flags(couple_cmd, cp_flags);
  add_rhythm_flags(couple_cmd, cp_flags);
  couple_cmd->callback([&] {
    const VideoDocument doc = load_document(cp_manifest, cp_flags.bins);
    const Segmentation initial = cp_initial.empty()
                                     ? segment_spatial_temporal(doc, cp_flags.threshold)
                                     : parse_segmentation(read_text_file(cp_initial));
    const CouplingResult result =
        couple(doc, initial, cp_flags.alpha, cp_flags.min_group, cp_flags.denom());
    const Segmentation refined = resolve_residuals(doc, result.segmentation, cp_flags.min_group,
                                                   cp_flags.alpha, cp_flags.denom());
    emit(cp_out, segmentation_json(refined));
    if (!cp_trace_out.empty()) emit(cp_trace_out, trace_json(result.trace));
  });

  // ---- synth ----
  auto* synth = app.add_subcommand("synth", "generate a fixture manifest with ground truth");
  std::string sy_spec, sy_out, sy_truth, sy_keyframes;
  std::optional<std::uint64_t> sy_seed;
  synth->add_option("--spec", sy_spec, "fixture spec JSON")->required();
  synth->add_option("--out", sy_out, "manifest JSON path (stdout when omitted)");
  synth->add_option("--truth", sy_truth, "ground truth JSON path");
  synth->add_option("--keyframes", sy_keyframes,
                    "directory for key frame images; manifest references them "
                    "instead of carrying inline histograms");
  synth->add_option("--seed", sy_seed, "override the spec's seed");
  synth->callback([&] {
    FixtureSpec spec = parse_fixture_spec(read_text_file(sy_spec));
    if (sy_seed) spec.seed = *sy_seed;
    auto [doc, truth] = synthesize(spec);
    if (!sy_keyframes.empty()) {
      fs::create_directories(sy_keyframes);
      const fs::path manifest_dir = sy_out.empty() ? fs::path(".") : fs::path(sy_out).parent_path();
      for (Shot& shot : doc.shots) {
        Histogram h{spec.bins_per_channel, shot.histogram};
        const Image img = render_keyframe(h, spec.image_width, spec.image_height);
        const fs::path file =
            fs::path(sy_keyframes) / ("shot_" + std::to_string(shot.id) + ".ppm");
        write_ppm_file(img, file.string());
        fs::path rel = file.lexically_relative(manifest_dir);
        shot.keyframe = (rel.empty() ? file : rel).generic_string();
        shot.histogram.clear();
      }
    }
    emit(sy_out, manifest_json(doc));
    if (!sy_truth.empty()) emit(sy_truth, ground_truth_json(truth));
  });

  // ---- eval ----
  auto* eval_cmd = app.add_subcommand("eval", "score a segmentation against ground truth");
  std::string ev_pred, ev_truth, ev_initial, ev_out;
  int ev_tolerance = 0;
  bool ev_table = false;
  eval_cmd->add_option("--pred", ev_pred, "predicted segmentation JSON")->required();
  eval_cmd->add_option("--truth", ev_truth, "ground truth JSON")->required();
  eval_cmd->add_option("--initial", ev_initial, "pre-coupling segmentation JSON for the table");
  eval_cmd->add_option("--tolerance", ev_tolerance, "boundary match tolerance in shots");
  eval_cmd->add_option("--out", ev_out, "report JSON path (stdout when omitted)");
  eval_cmd->add_flag("--table", ev_table, "print the scene interval table");
  eval_cmd->callback([&] {
    const Segmentation predicted = parse_segmentation(read_text_file(ev_pred));
    const GroundTruth truth = parse_ground_truth(read_text_file(ev_truth));
    const EvalReport report = evaluate(predicted, truth, ev_tolerance);
    emit(ev_out, eval_report_json(report));
    if (ev_table) {
      std::optional<Segmentation> initial;
      if (!ev_initial.empty()) initial = parse_segmentation(read_text_file(ev_initial));
      std::cout << render_table(initial, predicted, truth);
    }
  });

  // ---- foe ----
  auto* foe = app.add_subcommand("foe", "detect shot transitions from per-frame point patterns");
  std::string foe_patterns, foe_out;
  MatchConfig foe_cfg;
  double foe_rate = 25.0;
  foe->add_option("--patterns", foe_patterns, "point pattern JSON")->required();
  foe->add_option("--out", foe_out, "manifest skeleton JSON path (stdout when omitted)");
  foe->add_option("--radius", foe_cfg.zone_radius, "match zone radius");
  foe->add_option("--penalty", foe_cfg.penalty, "local score for unmatched points");
  foe->add_option("--threshold", foe_cfg.threshold, "resemblance below which a boundary is flagged");
  foe->add_option("--min-run", foe_cfg.min_gradual_run, "run length that reads as gradual")
      ->check(CLI::Range(2, 1 << 20));
  foe->add_option("--frame-rate", foe_rate, "frame rate stamped on the skeleton");
  foe->callback([&] {
    const std::vector<PointPattern> patterns = parse_patterns(read_text_file(foe_patterns));
    const std::vector<TransitionMark> marks = detect_shot_transitions(patterns, foe_cfg);

    std::vector<ShotRecord> records;
    Frame start = 0;
    for (const TransitionMark& mark : marks) {
      ShotRecord rec;
      rec.td = mark.frame - start;
      rec.transition = TransitionEffect{mark.kind, mark.length - 1};
      records.push_back(std::move(rec));
      start = mark.frame + mark.length - 1;
    }
    ShotRecord tail;
    tail.td = static_cast<Frame>(patterns.size()) - start;
    records.push_back(std::move(tail));

    emit(foe_out, manifest_json(validate_manifest(records, foe_rate)));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const Error& e) {
    std::cerr << "cineparse: " << e.what() << "\n";
    return e.kind() == ErrorKind::validation ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "cineparse: internal error: " << e.what() << "\n";
    return 3;
  }
}
