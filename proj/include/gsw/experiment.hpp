#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsw/challenges.hpp"

namespace gsw {

// One entry of the "actions" list. Either an explicit action (degree +
// images) or a named family expanded at run time.
struct ActionSpec {
  std::string family;                   // "", "z2-torus", "random-transitive"
  std::vector<int> sizes;               // z2-torus side lengths, one action each
  std::vector<int> degrees;             // random-transitive degrees
  int extra_generators = 1;             // random-transitive: generators beyond the cycle
  int degree = 0;                       // explicit action
  std::vector<std::vector<int>> images; // explicit action, one image per generator
};

// One entry of the "challenge" list: a bare generator map, optionally with a
// claimed (unverified) source degree.
struct ChallengeItemSpec {
  int degree = 0;
  int source_degree = 0;  // 0 = no claim
  std::vector<std::vector<int>> images;
};

struct ExperimentSpec {
  int version = 1;
  int generators = 0;
  std::vector<std::vector<int>> relators;  // signed letter codes
  MetricKind metric = MetricKind::Hamming;
  std::uint64_t seed = 0;
  std::vector<ActionSpec> actions;         // exactly one of actions/challenge
  std::vector<ChallengeItemSpec> challenge;
  PipelineOptions pipeline;
  std::string output_csv;                  // empty = don't write a file
};

ExperimentSpec parse_spec(const std::string& json_text);
nlohmann::json to_json(const ExperimentSpec& spec);

// Expands the action list (seeded families draw from a single stream seeded
// with spec.seed) and hands everything to the pipeline.
std::vector<PermAction> expand_actions(const ExperimentSpec& spec);

struct ExperimentResult {
  PipelineReport report;
  std::string csv;     // summary table, one row per challenge index
  int exit_code = 0;   // 0 clean, 1 violations or failed sofic check
};

ExperimentResult run_experiment(const ExperimentSpec& spec);

// The CSV text alone, for callers that already hold a report.
std::string report_csv(const PipelineReport& report);

}  // namespace gsw
