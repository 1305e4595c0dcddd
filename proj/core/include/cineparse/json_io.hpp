#pragma once

#include <string>
#include <vector>

#include "cineparse/clustering.hpp"
#include "cineparse/coupling.hpp"
#include "cineparse/evaluation.hpp"
#include "cineparse/foe_match.hpp"
#include "cineparse/model.hpp"
#include "cineparse/rhythm.hpp"
#include "cineparse/scene_extraction.hpp"
#include "cineparse/synth.hpp"
#include "cineparse/temporal_graph.hpp"

namespace cineparse {

// Raw manifest content before timeline validation.
struct ManifestRecords {
  double frame_rate = 25.0;
  int bins_per_channel = 0;
  std::vector<ShotRecord> records;
};

ManifestRecords parse_manifest_records(const std::string& text);

// Parse plus timeline validation in one step.
VideoDocument parse_manifest(const std::string& text);

std::string manifest_json(const VideoDocument& doc);

std::string clusters_json(const TimeSpaceGraph& tsg);

std::string tcg_json(const TemporalClustersGraph& tcg);

std::string segmentation_json(const Segmentation& seg);
Segmentation parse_segmentation(const std::string& text);

std::string trace_json(const std::vector<MergeEvent>& trace);
std::vector<MergeEvent> parse_trace(const std::string& text);

std::string ground_truth_json(const GroundTruth& truth);
GroundTruth parse_ground_truth(const std::string& text);

FixtureSpec parse_fixture_spec(const std::string& text);
std::string fixture_spec_json(const FixtureSpec& spec);

std::vector<PointPattern> parse_patterns(const std::string& text);
std::string patterns_json(const std::vector<PointPattern>& patterns);

std::string eval_report_json(const EvalReport& report);

// Per-group stats dump; groups of fewer than two shots carry no statistics.
std::string rhythm_report_json(const std::vector<ShotGroup>& groups, double alpha,
                               DeviationDenominator denom);

// All reals pass through a 12-significant-digit round-trip before emission so
// repeated runs produce byte-identical files.
double round12(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cineparse
