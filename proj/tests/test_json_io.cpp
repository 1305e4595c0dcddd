#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include "cineparse/coupling.hpp"
#include "cineparse/json_io.hpp"
#include "cineparse/random.hpp"
#include "cineparse/synth.hpp"
#include "fixtures.hpp"

using namespace cineparse;

TEST_CASE("reals survive the twelve-digit funnel unchanged on reuse") {
  CHECK(round12(0.25) == 0.25);
  CHECK(round12(2.0) == 2.0);
  CHECK(round12(1.0 / 3.0) == 0.333333333333);
  StableRng rng(42);
  for (int i = 0; i < 200; ++i) {
    const double v = rng.normal(0.0, 100.0);
    CHECK(round12(round12(v)) == round12(v));
  }
}

TEST_CASE("manifest emission matches the documented layout byte for byte") {
  const std::string golden =
      "{\n"
      "  \"frame_rate\": 25.0,\n"
      "  \"shots\": [\n"
      "    {\n"
      "      \"id\": 0,\n"
      "      \"td\": 10,\n"
      "      \"transition\": {\n"
      "        \"kind\": \"dissolve\",\n"
      "        \"tau\": 2\n"
      "      },\n"
      "      \"t\": 0\n"
      "    },\n"
      "    {\n"
      "      \"id\": 1,\n"
      "      \"td\": 5,\n"
      "      \"t\": 12\n"
      "    }\n"
      "  ]\n"
      "}\n";
  const VideoDocument doc = parse_manifest(golden);
  REQUIRE(doc.shots.size() == 2);
  CHECK(doc.shots[0].transition->tau == 2);
  CHECK(doc.shots[1].t == 12);
  CHECK(manifest_json(doc) == golden);
}

TEST_CASE("manifest round-trip is stable for generated documents") {
  const auto [doc, truth] = synthesize(fixtures::easy_spec(1));
  const std::string text = manifest_json(doc);
  const VideoDocument back = parse_manifest(text);
  CHECK(manifest_json(back) == text);
  CHECK(back.bins_per_channel == doc.bins_per_channel);
  CHECK(back.shots.size() == doc.shots.size());
}

TEST_CASE("raw records keep optional fields optional") {
  const ManifestRecords raw =
      parse_manifest_records("{\"frame_rate\": 24, \"shots\": [{\"td\": 7}]}");
  CHECK(raw.frame_rate == 24.0);
  CHECK(raw.bins_per_channel == 0);
  REQUIRE(raw.records.size() == 1);
  CHECK_FALSE(raw.records[0].id.has_value());
  CHECK_FALSE(raw.records[0].t.has_value());
  CHECK(raw.records[0].td == 7);
}

TEST_CASE("broken manifests fail as validation errors") {
  const char* rows[] = {
      "not json at all",
      "{\"frame_rate\": 25}",
      "{\"frame_rate\": 25, \"shots\": [{}]}",
      "{\"frame_rate\": 25, \"shots\": [{\"td\": \"soon\"}]}",
      "{\"frame_rate\": 25, \"shots\": [{\"td\": 5, \"transition\": {\"kind\": \"waffle\", \"tau\": 3}}]}",
  };
  for (const char* text : rows) {
    try {
      parse_manifest(text);
      FAIL_CHECK("parsed a broken manifest");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::bad_input);
    }
  }
  try {
    parse_manifest("nope");
    FAIL("parsed garbage");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("manifest") != std::string::npos);
  }
}

TEST_CASE("segmentation round-trips through its file form") {
  const auto [doc, truth] = synthesize(fixtures::random_spec(21));
  const PipelineResult result = segment_full(doc);
  const std::string text = segmentation_json(result.coupled);
  const Segmentation back = parse_segmentation(text);
  CHECK(back == result.coupled);
  CHECK(segmentation_json(back) == text);
}

TEST_CASE("segmentation parsing restores sequence membership from spans") {
  const std::string text =
      "{\"scenes\": ["
      "{\"id\": 0, \"first_shot\": 0, \"last_shot\": 1, \"clusters\": [0], \"one_shot\": false},"
      "{\"id\": 1, \"first_shot\": 2, \"last_shot\": 3, \"clusters\": [1], \"one_shot\": false}],"
      "\"sequences\": [{\"first_shot\": 0, \"last_shot\": 1}, {\"first_shot\": 2, \"last_shot\": 3}]}";
  const Segmentation seg = parse_segmentation(text);
  REQUIRE(seg.scenes.size() == 2);
  CHECK(seg.scenes[0].sequence == 0);
  CHECK(seg.scenes[1].sequence == 1);
}

TEST_CASE("merge trace emission is exact and reversible") {
  const std::vector<MergeEvent> trace{{1, 9, 3, GroupSide::back, 0.25}};
  const std::string golden =
      "[\n"
      "  {\n"
      "    \"pass\": 1,\n"
      "    \"shot\": 9,\n"
      "    \"absorbed_into\": 3,\n"
      "    \"side\": \"back\",\n"
      "    \"zscore\": 0.25\n"
      "  }\n"
      "]\n";
  CHECK(trace_json(trace) == golden);
  CHECK(parse_trace(golden) == trace);
  CHECK(trace_json({}) == "[]\n");
  CHECK(parse_trace("[]\n").empty());
  CHECK_THROWS_AS(parse_trace("[{\"pass\": 1, \"shot\": 0, \"absorbed_into\": 0,"
                              " \"side\": \"sideways\", \"zscore\": 0}]"),
                  Error);
}

TEST_CASE("walkthrough traces survive the file form at full precision") {
  const auto [doc, truth] = synthesize(fixtures::absorption_walkthrough_spec());
  const PipelineResult result = segment_full(doc);
  REQUIRE_FALSE(result.trace.empty());
  const std::vector<MergeEvent> back = parse_trace(trace_json(result.trace));
  REQUIRE(back.size() == result.trace.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].pass == result.trace[i].pass);
    CHECK(back[i].shot == result.trace[i].shot);
    CHECK(back[i].absorbed_into == result.trace[i].absorbed_into);
    CHECK(back[i].side == result.trace[i].side);
    CHECK(back[i].zscore == round12(result.trace[i].zscore));
  }
}

TEST_CASE("ground truth round-trips exactly") {
  const auto [doc, truth] = synthesize(fixtures::random_spec(3));
  CHECK(parse_ground_truth(ground_truth_json(truth)) == truth);
}

TEST_CASE("fixture specs round-trip and regenerate the same document") {
  const FixtureSpec spec = fixtures::easy_spec(2);
  const std::string text = fixture_spec_json(spec);
  const FixtureSpec back = parse_fixture_spec(text);
  CHECK(fixture_spec_json(back) == text);
  const auto [doc_a, truth_a] = synthesize(spec);
  const auto [doc_b, truth_b] = synthesize(back);
  CHECK(manifest_json(doc_a) == manifest_json(doc_b));
  CHECK(truth_a == truth_b);
}

TEST_CASE("a minimal fixture spec fills in every default") {
  const FixtureSpec spec = parse_fixture_spec("{\"sequences\": [{\"scenes\": [{}]}]}");
  CHECK(spec.seed == 0);
  CHECK(spec.threshold == 0.1);
  CHECK(spec.bins_per_channel == 4);
  CHECK(spec.image_width == 16);
  CHECK(spec.image_height == 16);
  CHECK(spec.start_time == 0);
  REQUIRE(spec.sequences.size() == 1);
  REQUIRE(spec.sequences[0].scenes.size() == 1);
  CHECK(spec.sequences[0].scenes[0].shots == 1);
  CHECK(spec.sequences[0].scenes[0].clusters == 1);
  CHECK(spec.sequences[0].scenes[0].base_duration == 10);
  const auto [doc, truth] = synthesize(spec);
  CHECK(truth.total_shots == 1);
}

TEST_CASE("point pattern files round-trip and sort by frame") {
  std::vector<PointPattern> patterns(3);
  patterns[0].points = {{1.0, 2.0}, {3.5, -4.25}};
  patterns[2].points = {{0.0, 0.0}};
  CHECK(parse_patterns(patterns_json(patterns)) == patterns);

  const std::string shuffled =
      "[{\"frame\": 2, \"points\": [[9, 9]]},"
      " {\"frame\": 0, \"points\": [[1, 1]]},"
      " {\"frame\": 1, \"points\": []}]";
  const std::vector<PointPattern> ordered = parse_patterns(shuffled);
  REQUIRE(ordered.size() == 3);
  CHECK(ordered[0].points == std::vector<std::pair<double, double>>{{1.0, 1.0}});
  CHECK(ordered[1].points.empty());
  CHECK(ordered[2].points == std::vector<std::pair<double, double>>{{9.0, 9.0}});
}

TEST_CASE("malformed pattern files are refused") {
  try {
    parse_patterns("[{\"frame\": 1, \"points\": []}, {\"frame\": 1, \"points\": []}]");
    FAIL("accepted duplicate frames");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_input);
    CHECK(std::string(e.what()).find("duplicate frame") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_patterns("[{\"frame\": 0, \"points\": [[1]]}]"), Error);
  CHECK_THROWS_AS(parse_patterns("[{\"frame\": 0, \"points\": [[1, 2, 3]]}]"), Error);
  CHECK_THROWS_AS(parse_patterns("[{\"points\": []}]"), Error);
}

TEST_CASE("evaluation reports serialize every column") {
  const auto [doc, truth] = synthesize(fixtures::random_spec(9));
  Segmentation predicted;
  predicted.scenes.push_back({0, 0, truth.total_shots - 1, {}, 0, false});
  predicted.sequences = truth.sequences;
  const std::string text = eval_report_json(evaluate(predicted, truth));
  CHECK(text.find("\"precision\":") != std::string::npos);
  CHECK(text.find("\"recall\":") != std::string::npos);
  CHECK(text.find("\"f1\":") != std::string::npos);
  CHECK(text.find("\"surviving_one_shot\":") != std::string::npos);
  if (truth.scenes.size() > 1) CHECK(text.find("\"predicted\": null") != std::string::npos);
}

TEST_CASE("rhythm report carries stats only where they exist") {
  ShotGroup lone;
  lone.first_shot = 0;
  lone.durations = {5};
  const std::string golden =
      "{\n"
      "  \"alpha\": 2.25,\n"
      "  \"denominator\": \"PaperN\",\n"
      "  \"groups\": [\n"
      "    {\n"
      "      \"first_shot\": 0,\n"
      "      \"last_shot\": 0,\n"
      "      \"durations\": [\n"
      "        5\n"
      "      ]\n"
      "    }\n"
      "  ]\n"
      "}\n";
  CHECK(rhythm_report_json({lone}, 2.25, DeviationDenominator::paper_n) == golden);

  ShotGroup triple;
  triple.first_shot = 4;
  triple.durations = {10, 14, 11};
  const std::string text =
      rhythm_report_json({triple}, 2.25, DeviationDenominator::paper_n);
  CHECK(text.find("\"mean_variation\": 2.33333333333") != std::string::npos);
  CHECK(text.find("\"deviation\":") != std::string::npos);
  CHECK(text.find("\"safe_interval\":") != std::string::npos);
  CHECK(text.find("\"last_shot\": 6") != std::string::npos);
  const std::string unbiased =
      rhythm_report_json({triple}, 2.25, DeviationDenominator::unbiased);
  CHECK(unbiased.find("\"denominator\": \"Unbiased\"") != std::string::npos);
}

TEST_CASE("text files round-trip bytes and report access errors") {
  const std::string path = "cineparse_io_test.tmp";
  const std::string body = "line one\nline two\n";
  write_text_file(path, body);
  CHECK(read_text_file(path) == body);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_text_file("definitely/not/there.json"), Error);
  CHECK_THROWS_AS(write_text_file("no_such_dir/out.json", "x"), Error);
}
