#include "cineparse/evaluation.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cineparse/errors.hpp"

namespace cineparse {

namespace {

std::vector<int> boundary_shots(const std::vector<SequenceSpan>& spans, int universe_start) {
  std::vector<int> out;
  for (const auto& s : spans) {
    if (s.first_shot != universe_start) out.push_back(s.first_shot);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SequenceSpan> scene_spans(const Segmentation& seg) {
  std::vector<SequenceSpan> out;
  out.reserve(seg.scenes.size());
  for (const auto& sc : seg.scenes) out.push_back({sc.first_shot, sc.last_shot});
  return out;
}

std::string span_text(const std::optional<SequenceSpan>& span) {
  if (!span) return "-";
  std::ostringstream os;
  os << span->first_shot << "-" << span->last_shot;
  return os.str();
}

}  // namespace

EvalReport evaluate(const Segmentation& predicted, const GroundTruth& truth, int tolerance) {
  if (tolerance < 0) fail(Errc::bad_input, "tolerance must be non-negative");

  int predicted_shots = 0;
  if (!predicted.scenes.empty())
    predicted_shots = predicted.scenes.back().last_shot - predicted.scenes.front().first_shot + 1;
  if (predicted_shots != truth.total_shots)
    fail(Errc::universe_mismatch, "prediction covers " + std::to_string(predicted_shots) +
                                      " shots, reference covers " + std::to_string(truth.total_shots));
  if (!predicted.scenes.empty() && !truth.scenes.empty() &&
      predicted.scenes.front().first_shot != truth.scenes.front().first_shot)
    fail(Errc::universe_mismatch, "prediction and reference start at different shots");

  const int start = predicted.scenes.empty()
                        ? (truth.scenes.empty() ? 0 : truth.scenes.front().first_shot)
                        : predicted.scenes.front().first_shot;
  const auto predicted_spans = scene_spans(predicted);
  const auto predicted_bounds = boundary_shots(predicted_spans, start);
  const auto truth_bounds = boundary_shots(truth.scenes, start);

  int hits = 0;
  std::size_t ti = 0;
  for (int pb : predicted_bounds) {
    while (ti < truth_bounds.size() && truth_bounds[ti] < pb - tolerance) ++ti;
    if (ti < truth_bounds.size() && std::abs(truth_bounds[ti] - pb) <= tolerance) {
      ++hits;
      ++ti;
    }
  }

  EvalReport report;
  report.predicted_scenes = static_cast<int>(predicted.scenes.size());
  report.truth_scenes = static_cast<int>(truth.scenes.size());
  for (const auto& sc : predicted.scenes)
    if (sc.one_shot) ++report.surviving_one_shot;

  if (predicted_bounds.empty() && truth_bounds.empty()) {
    report.precision = 1.0;
    report.recall = 1.0;
    report.f1 = 1.0;
  } else {
    report.precision =
        predicted_bounds.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(predicted_bounds.size());
    report.recall = truth_bounds.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(truth_bounds.size());
    report.f1 = (report.precision + report.recall) > 0.0
                    ? 2.0 * report.precision * report.recall / (report.precision + report.recall)
                    : 0.0;
  }

  const std::size_t rows = std::max(predicted_spans.size(), truth.scenes.size());
  for (std::size_t i = 0; i < rows; ++i) {
    SceneDiff diff;
    if (i < predicted_spans.size()) diff.predicted = predicted_spans[i];
    if (i < truth.scenes.size()) diff.truth = truth.scenes[i];
    report.scene_diffs.push_back(diff);
  }
  return report;
}

std::string render_table(const std::optional<Segmentation>& initial, const Segmentation& predicted,
                         const GroundTruth& truth) {
  std::vector<SequenceSpan> initial_spans;
  if (initial) initial_spans = scene_spans(*initial);
  const auto predicted_spans = scene_spans(predicted);

  std::size_t rows = std::max(predicted_spans.size(), truth.scenes.size());
  rows = std::max(rows, initial_spans.size());

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"scene"};
  if (initial) header.push_back("initial");
  header.push_back("coupled");
  header.push_back("reference");
  cells.push_back(header);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::string> row{std::to_string(i + 1)};
    if (initial) row.push_back(i < initial_spans.size() ? span_text(initial_spans[i]) : "-");
    row.push_back(i < predicted_spans.size() ? span_text(predicted_spans[i]) : "-");
    row.push_back(i < truth.scenes.size() ? span_text(truth.scenes[i]) : "-");
    cells.push_back(row);
  }

  const std::size_t cols = header.size();
  std::vector<std::size_t> widths(cols, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < cols; ++c) widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c > 0) os << "  ";
      os << row[c];
      if (c + 1 < cols) os << std::string(widths[c] - row[c].size(), ' ');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cineparse
