// challenges.hpp -- building stability challenges by deleting a point from a
// family of actions, measuring word defects and solution distances, sofic
// trend checks, and the full quantitative pipeline that ties restriction
// defects, intertwiner residuals and the spectral-gap bound together.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gsw/actions.hpp"
#include "gsw/metrics.hpp"
#include "gsw/nearness.hpp"
#include "gsw/words.hpp"

namespace gsw {

using GeneratorMap = std::variant<PermGeneratorMap, UnitaryGeneratorMap>;

int map_degree(const GeneratorMap& m);
int map_alphabet(const GeneratorMap& m);

enum class TargetKind { Permutation, Unitary };

// Result of cutting the last point/basis direction out of an action: the
// per-generator repaired images together with the repair defects.
struct RestrictedAction {
  GeneratorMap rho;                         // images on n-1 points
  std::vector<double> restriction_defects;  // ||T0 - A0||_F per generator, <= 1
  std::vector<double> inclusion_defects;    // ||T^-1 . f . A0 - f||_F, <= 2
  int source_degree = 0;
};

RestrictedAction restrict_action(const PermAction& action, TargetKind kind);
RestrictedAction restrict_action(const UnitaryGeneratorMap& rep);

// Partial restriction to an arbitrary subset: images forced wherever the
// generator maps Y into Y, the leftover points matched up by a seeded random
// bijection. Subset points are renumbered in increasing original order.
PermGeneratorMap restrict_to_subset(const PermAction& action,
                                    const std::vector<int>& subset,
                                    std::uint64_t seed);

struct ChallengeItem {
  GeneratorMap map;
  std::optional<PermAction> source;          // present when built by restriction
  std::vector<int> deleted_points;           // original indices
  std::vector<double> restriction_defects;   // empty for direct items
  std::vector<double> inclusion_defects;     // empty for direct items
  std::optional<int> claimed_source_degree;  // direct items may claim provenance

  int degree() const { return map_degree(map); }
  bool restriction_built() const {
    return source.has_value() || claimed_source_degree.has_value();
  }
};

// Challenge degrees are nondecreasing; relators travel with the challenge.
struct Challenge {
  std::vector<ChallengeItem> items;
  std::vector<Word> relators;
};

// Deletes the last point of every family member. Source degrees must be
// strictly increasing.
Challenge build_challenge(const std::vector<PermAction>& family,
                          const std::vector<Word>& relators, TargetKind kind);

// Wraps explicitly given maps (nondecreasing degrees) with no restriction
// provenance; claimed_source_degrees, when given, mark the items as claimed
// restrictions so that defect bounds apply to them.
Challenge challenge_from_maps(std::vector<GeneratorMap> maps,
                              const std::vector<Word>& relators,
                              const std::vector<int>& claimed_source_degrees = {});

// Word defects d(f_k(w), identity) for every item and word, in the requested
// metric. For restriction-built items the Hilbert-Schmidt defect is also
// evaluated against the bound 3^|w| / sqrt(n_k) and the ratios are reported;
// a ratio beyond 1 + 1e-9 sets bound_violated.
struct DefectReport {
  std::vector<Word> words;
  std::vector<std::vector<double>> defects;     // [item][word], requested metric
  std::vector<std::vector<double>> hs_defects;  // [item][word]
  std::vector<std::vector<double>> bounds;      // empty row for direct items
  std::vector<std::vector<double>> ratios;      // hs defect / bound
  double max_ratio = 0;
  bool bound_violated = false;
};
DefectReport evaluate_defects(const Challenge& c, const std::vector<Word>& words,
                              MetricKind metric);

// Candidate solutions: relator-exact maps, one per challenge index. Permutation
// solutions may exceed the item degree under flex metrics (the padding column
// records by how much); all other metrics require matching degrees. A relator
// that fails to die raises non_solution_error naming the index and relator.
struct SolutionReport {
  std::vector<std::vector<double>> generator_distances;  // [item][generator]
  std::vector<double> sum_distances;                     // per item
  std::vector<int> padding;                              // m - n_k per item
  bool trend_to_zero = false;
};

struct TrendPolicy {
  double threshold_zero = 0.25;  // final term must fall below this
  double threshold_one = 0.75;   // final term must rise above this
  double monotone_slack = 1.10;  // the deviation may grow at most 10% per step
                                 // over the last half of the sequence
};

SolutionReport evaluate_solution(const Challenge& c,
                                 const std::vector<GeneratorMap>& g,
                                 MetricKind metric,
                                 const TrendPolicy& policy = {});

// Trend of a nonnegative sequence toward a limit: final deviation below the
// threshold and no more than `slack`-fold growth between consecutive terms in
// the last half.
bool trend_toward(const std::vector<double>& xs, double limit, double threshold,
                  double slack);

// Sofic-style check: defects over kernel words must trend to 0 and defects
// over designated non-kernel words must trend to 1 (Hamming scale). The two
// word lists must be disjoint.
struct SoficReport {
  std::vector<double> kernel_max_defect;     // per item
  std::vector<double> non_kernel_min_defect; // per item
  bool kernel_pass = false;
  bool non_kernel_pass = false;
  bool pass = false;
};
SoficReport is_sofic_approximation(const Challenge& c,
                                   const std::vector<Word>& kernel_words,
                                   const std::vector<Word>& non_kernel_words,
                                   MetricKind metric = MetricKind::Hamming,
                                   const TrendPolicy& policy = {});

struct PipelineOptions {
  bool defects = true;
  bool projection = true;
  bool oracle = false;
  bool sofic_check = false;
  int kernel_max_len = 8;
  int kernel_count = 12;
  std::uint64_t seed = 0;
  int max_target_degree = 0;  // 0: per-index degree + 2 under flex metrics
  int kazhdan_block_cap = 2048;
  std::optional<std::vector<PermGeneratorMap>> solution;  // one per index
  std::vector<Word> non_kernel_words;
  TrendPolicy trend;
};

struct PipelineIndexReport {
  int index = 0;
  int degree = 0;         // |B0|
  int source_degree = 0;  // |B|
  bool transitive_source = false;

  std::vector<double> restriction_defects;
  std::vector<double> almost_equivariance;  // inclusion defects, <= 2
  double max_defect = 0;
  double max_bound_ratio = 0;

  // Projection of the inclusion against the patched restriction.
  double residual = 0;
  double residual_sq = 0;
  double residual_sq_closed = 0;
  double residual_floor = 0;  // sqrt(|B0| / 2)
  long long min_orbit_margin = 0;
  bool projection_done = false;

  // Solution-side quantities (exact-degree permutation solutions only).
  std::string solution_source = "none";  // none | supplied | oracle
  double solution_distance = 0;
  int solution_degree = 0;
  double solution_residual = 0;       // projection residual against the solution
  double eps_actual = 0;              // max_s ||alpha(s^-1) f rho~(s) - f|| / ||f||
  double eps_chain = 0;               // 2/sqrt(|B0|) + max_s hs(rho~(s), rho(s))
  double kazhdan_hat = 0;
  bool kazhdan_infinite = false;
  bool kazhdan_done = false;
  double morphism_gap_bound = 0;      // eps_chain / kappa_hat
  double contradiction_margin = 0;    // 1/sqrt(2) - morphism_gap_bound
  bool solution_checked = false;
  std::string note;
};

struct PipelineReport {
  std::vector<Word> words;
  DefectReport defects;
  std::vector<PipelineIndexReport> items;
  std::optional<SoficReport> sofic;
  std::vector<std::string> violations;  // named failed inequalities
  bool ok() const { return violations.empty(); }
};

// End-to-end run over a family of transitive actions: build the restricted
// challenge, sample kernel words, evaluate defects and their bounds, project
// the inclusion, and (when a solution is supplied or found) evaluate the
// spectral-gap side of the argument.
PipelineReport run_pipeline(const std::vector<PermAction>& family,
                            const std::vector<Word>& relators, MetricKind metric,
                            const PipelineOptions& options = {});

// The same reporting pipeline over an explicitly supplied challenge (no
// source actions, so projection and solution analysis are limited to what the
// items carry).
PipelineReport run_pipeline(const Challenge& c, MetricKind metric,
                            const PipelineOptions& options = {});

}  // namespace gsw
