#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gsw/errors.hpp"
#include "gsw/experiment.hpp"

using namespace gsw;

namespace {

const char* kTorusSpec = R"({
  "generators": 2,
  "relators": [[1, 2, -1, -2]],
  "seed": 11,
  "actions": [{"family": "z2-torus", "sizes": [3, 4]}],
  "pipeline": {"kernel_max_len": 6, "kernel_count": 6}
})";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) { out.push_back(cur); cur.clear(); }
    else cur += c;
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("minimal spec parses with defaults") {
  const ExperimentSpec s = parse_spec(kTorusSpec);
  CHECK(s.version == 1);
  CHECK(s.generators == 2);
  CHECK(s.relators == std::vector<std::vector<int>>{{1, 2, -1, -2}});
  CHECK(s.metric == MetricKind::Hamming);
  CHECK(s.seed == 11);
  CHECK(s.output_csv.empty());
  REQUIRE(s.actions.size() == 1);
  CHECK(s.actions[0].family == "z2-torus");
  CHECK(s.actions[0].sizes == std::vector<int>{3, 4});
  CHECK(s.pipeline.kernel_max_len == 6);
  CHECK(s.pipeline.kernel_count == 6);
  CHECK(s.pipeline.defects);
  CHECK(s.pipeline.projection);
  CHECK_FALSE(s.pipeline.oracle);
  CHECK_FALSE(s.pipeline.sofic_check);
  CHECK(s.pipeline.seed == 11);  // pipeline inherits the experiment seed
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(parse_spec("not json"), input_error);
  CHECK_THROWS_AS(parse_spec("[1,2]"), input_error);
  CHECK_THROWS_AS(parse_spec(R"({"relators": []})"), input_error);
  CHECK_THROWS_AS(parse_spec(R"({"generators": 2})"), input_error);
  CHECK_THROWS_AS(
      parse_spec(R"({"generators": 0, "relators": [], "challenge": []})"),
      input_error);
  // Letters outside the alphabet are caught during parsing.
  CHECK_THROWS_AS(parse_spec(R"({
    "generators": 2, "relators": [[3]],
    "actions": [{"family": "z2-torus", "sizes": [3]}]})"),
                  input_error);
  CHECK_THROWS_AS(parse_spec(R"({
    "generators": 2, "relators": [[1]], "version": 2,
    "actions": [{"family": "z2-torus", "sizes": [3]}]})"),
                  input_error);
  CHECK_THROWS_AS(parse_spec(R"({
    "generators": 2, "relators": [[1]], "metric": "euclid",
    "actions": [{"family": "z2-torus", "sizes": [3]}]})"),
                  input_error);
  // Exactly one of actions/challenge.
  CHECK_THROWS_AS(parse_spec(R"({"generators": 2, "relators": [[1]]})"),
                  input_error);
  CHECK_THROWS_AS(parse_spec(R"({
    "generators": 2, "relators": [[1]],
    "actions": [{"family": "z2-torus", "sizes": [3]}],
    "challenge": [{"degree": 2, "images": [[1,0],[0,1]]}]})"),
                  input_error);
  // Family-specific constraints.
  CHECK_THROWS_AS(parse_spec(R"({
    "generators": 3, "relators": [[1]],
    "actions": [{"family": "z2-torus", "sizes": [3]}]})"),
                  input_error);
  CHECK_THROWS_AS(parse_spec(R"({
    "generators": 2, "relators": [[1]],
    "actions": [{"family": "z2-torus", "sizes": []}]})"),
                  input_error);
  CHECK_THROWS_AS(parse_spec(R"({
    "generators": 2, "relators": [[1]],
    "actions": [{"family": "hexagon", "sizes": [3]}]})"),
                  input_error);
  CHECK_THROWS_AS(parse_spec(R"({
    "generators": 2, "relators": [[1]],
    "actions": [{"family": "random-transitive", "degrees": [5],
                 "extra_generators": 3}]})"),
                  input_error);
  // Explicit actions and challenge items must be fully shaped.
  CHECK_THROWS_AS(parse_spec(R"({
    "generators": 2, "relators": [[1]],
    "actions": [{"degree": 3, "images": [[1,0,2]]}]})"),
                  input_error);
  CHECK_THROWS_AS(parse_spec(R"({
    "generators": 2, "relators": [[1]],
    "actions": [{"degree": 3, "images": [[1,0],[0,1]]}]})"),
                  input_error);
  CHECK_THROWS_AS(parse_spec(R"({
    "generators": 1, "relators": [[1]],
    "challenge": [{"images": [[0,1]]}]})"),
                  input_error);
}

TEST_CASE("serialization round-trips") {
  const char* full = R"({
    "generators": 2,
    "relators": [[1, 2, -1, -2]],
    "metric": "flex",
    "seed": 99,
    "output_csv": "out.csv",
    "challenge": [{"degree": 3, "source_degree": 4,
                   "images": [[1, 2, 0], [2, 0, 1]]}],
    "pipeline": {
      "oracle": true,
      "kernel_max_len": 5,
      "kernel_count": 7,
      "non_kernel_words": [[1], [2]],
      "solution": [{"images": [[1, 2, 0], [2, 0, 1]]}],
      "trend": {"threshold_zero": 0.2}
    }
  })";
  const ExperimentSpec a = parse_spec(full);
  CHECK(a.metric == MetricKind::Flex);
  CHECK(a.challenge[0].source_degree == 4);
  REQUIRE(a.pipeline.solution.has_value());
  CHECK(a.pipeline.trend.threshold_zero == 0.2);
  CHECK(a.pipeline.trend.threshold_one == 0.75);

  const ExperimentSpec b = parse_spec(to_json(a).dump());
  CHECK(to_json(a) == to_json(b));

  const ExperimentSpec c = parse_spec(to_json(parse_spec(kTorusSpec)).dump());
  CHECK(to_json(c) == to_json(parse_spec(kTorusSpec)));
}

TEST_CASE("action expansion") {
  const std::vector<PermAction> fam = expand_actions(parse_spec(kTorusSpec));
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].degree() == 9);
  CHECK(fam[1].degree() == 16);

  const char* rnd = R"({
    "generators": 3, "relators": [[1, 2, -1, -2]], "seed": 5,
    "actions": [{"family": "random-transitive", "degrees": [6, 7],
                 "extra_generators": 2}]})";
  const std::vector<PermAction> r1 = expand_actions(parse_spec(rnd));
  const std::vector<PermAction> r2 = expand_actions(parse_spec(rnd));
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].degree() == 6);
  CHECK(r1[0].num_generators() == 3);
  CHECK(r1[0].is_transitive());
  CHECK(r1 == r2);

  const char* expl = R"({
    "generators": 2, "relators": [[1, 2, -1, -2]],
    "actions": [{"degree": 4, "images": [[1, 0, 3, 2], [2, 3, 0, 1]]}]})";
  const std::vector<PermAction> e = expand_actions(parse_spec(expl));
  CHECK(e[0].generator(0).images() == std::vector<int>{1, 0, 3, 2});
}

TEST_CASE("experiment run produces a stable summary table") {
  const ExperimentSpec s = parse_spec(kTorusSpec);
  const ExperimentResult r1 = run_experiment(s);
  const ExperimentResult r2 = run_experiment(s);
  CHECK(r1.exit_code == 0);
  CHECK(r1.csv == r2.csv);  // same spec, same seed, same bytes

  std::istringstream in(r1.csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 3);  // header + one row per index
  const std::vector<std::string> head = split_csv_line(lines[0]);
  REQUIRE(head.size() == 21);
  CHECK(head[0] == "index");
  CHECK(head[8] == "residual");
  CHECK(head[20] == "note");
  const std::vector<std::string> row = split_csv_line(lines[1]);
  REQUIRE(row.size() == 21);
  CHECK(row[0] == "0");
  CHECK(row[1] == "8");
  CHECK(row[2] == "9");
  CHECK(row[3] == "1");            // transitive source
  CHECK(row[11] == "none");        // no solution requested
  CHECK(row[8] != "");             // projection ran
  CHECK(row[12] == "");            // hence no solution degree
}

TEST_CASE("experiment writes the table to disk") {
  ExperimentSpec s = parse_spec(kTorusSpec);
  s.output_csv = "/tmp/gsw_experiment_test.csv";
  const ExperimentResult r = run_experiment(s);
  std::ifstream f(s.output_csv, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == r.csv);
  std::remove(s.output_csv.c_str());
}

TEST_CASE("fabricated challenge specs exit nonzero") {
  // A claimed restriction whose single-letter kernel words have defect far
  // above the advertised bound.
  std::ostringstream spec;
  spec << R"({"generators": 1, "relators": [[1]], "seed": 3, "challenge": [)"
       << R"({"degree": 60, "source_degree": 61, "images": [[)";
  for (int i = 0; i < 60; ++i) spec << (i ? "," : "") << (i + 7) % 60;
  spec << "]]}]}";
  const ExperimentResult r = run_experiment(parse_spec(spec.str()));
  CHECK(r.exit_code == 1);
  REQUIRE(!r.report.violations.empty());
  CHECK(r.report.violations[0] == "defect-ratio-bound");
  // Challenge mode has no source action, so the projection columns stay empty.
  std::istringstream in(r.csv);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  const std::vector<std::string> row = split_csv_line(line);
  CHECK(row[3] == "");
  CHECK(row[8] == "");
}

TEST_CASE("supplied solutions flow through to the table") {
  const char* spec = R"({
    "generators": 1,
    "relators": [[1, 1, 1, 1, 1]],
    "actions": [{"degree": 5, "images": [[1, 2, 3, 4, 0]]}],
    "pipeline": {"kernel_max_len": 5, "kernel_count": 3,
                 "solution": [{"images": [[0, 1, 2, 3]]}]}
  })";
  const ExperimentResult r = run_experiment(parse_spec(spec));
  CHECK(r.exit_code == 0);
  std::istringstream in(r.csv);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  const std::vector<std::string> row = split_csv_line(line);
  CHECK(row[11] == "supplied");
  CHECK(row[12] == "4");
  CHECK(row[17] != "");  // spectral column filled
}

TEST_CASE("sofic checking is reachable from a spec") {
  const char* spec = R"({
    "generators": 2,
    "relators": [[1, 2, -1, -2]],
    "seed": 2,
    "actions": [{"family": "z2-torus", "sizes": [5, 6, 7, 8]}],
    "pipeline": {"sofic_check": true, "kernel_max_len": 6, "kernel_count": 5,
                 "non_kernel_words": [[1], [2]]}
  })";
  const ExperimentResult r = run_experiment(parse_spec(spec));
  REQUIRE(r.report.sofic.has_value());
  CHECK(r.report.sofic->pass);
  CHECK(r.exit_code == 0);
}
