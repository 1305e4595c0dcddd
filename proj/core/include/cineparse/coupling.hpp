#pragma once

#include <vector>

#include "cineparse/rhythm.hpp"
#include "cineparse/scene_extraction.hpp"

namespace cineparse {

struct MergeEvent {
  int pass = 0;
  int shot = 0;
  int absorbed_into = 0;  // id of the absorbing scene in the initial segmentation
  GroupSide side = GroupSide::back;  // side of the absorbing scene that grew
  double zscore = 0.0;

  bool operator==(const MergeEvent&) const = default;
};

struct CouplingResult {
  Segmentation segmentation;
  std::vector<MergeEvent> trace;
  int passes = 0;
};

// Repeatedly sweeps the one-shot scenes (newest first within each pass) and
// absorbs each into the adjacent multi-shot scene whose rhythm it continues;
// with two willing neighbors the closer rhythm match wins, the earlier scene
// on an exact tie. Sweeps repeat until a full pass changes nothing. Merges
// never cross a sequence boundary.
CouplingResult couple(const VideoDocument& doc, const Segmentation& initial, double alpha,
                      int min_group, DeviationDenominator denom = DeviationDenominator::paper_n);

// Leftover one-shot scenes surviving in runs longer than two are re-cut purely
// by rhythm; shorter runs stay as they are.
Segmentation resolve_residuals(const VideoDocument& doc, const Segmentation& seg, int min_group,
                               double alpha,
                               DeviationDenominator denom = DeviationDenominator::paper_n);

struct PipelineOptions {
  double threshold = 0.1;
  double alpha = 2.25;
  int min_group = 3;
  int bins_per_channel = 4;
  DeviationDenominator denominator = DeviationDenominator::paper_n;
};

struct PipelineResult {
  Segmentation initial;
  Segmentation coupled;
  std::vector<MergeEvent> trace;
  int passes = 0;
};

PipelineResult segment_full(const VideoDocument& doc, const PipelineOptions& options = {});

}  // namespace cineparse
