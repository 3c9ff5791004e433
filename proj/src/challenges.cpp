#include "gsw/challenges.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsw/errors.hpp"

namespace gsw {

namespace {

constexpr double kSlack = 1e-9;

void push_violation(std::vector<std::string>& v, const std::string& name) {
  if (std::find(v.begin(), v.end(), name) == v.end()) v.push_back(name);
}

Eigen::MatrixXd inclusion_matrix(int b, int b0) {
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(b, b0);
  for (int x = 0; x < b0; ++x) f(x, x) = 1.0;
  return f;
}

// Per-generator permutation patch of an action, as an action on n-1 points.
PermAction patched_restriction(const PermAction& alpha) {
  std::vector<Permutation> images;
  images.reserve(alpha.num_generators());
  for (const Permutation& g : alpha.generators())
    images.push_back(repair_permutation(g).a0);
  return PermAction(alpha.degree() - 1, std::move(images));
}

// d(f(w), identity) in the requested metric. Flex metrics against the
// identity of the same degree degenerate to Hamming.
double word_defect(const GeneratorMap& map, const Word& w, MetricKind metric) {
  if (const auto* pm = std::get_if<PermGeneratorMap>(&map)) {
    const Permutation p = evaluate(*pm, w);
    const double h = hamming(p, Permutation::identity(pm->degree()));
    switch (metric) {
      case MetricKind::Hamming:
      case MetricKind::Flex:
      case MetricKind::VeryFlex:
        return h;
      case MetricKind::HS:
        return std::sqrt(2.0 * h);
      case MetricKind::Frobenius:
        return std::sqrt(2.0 * h * pm->degree());
    }
  }
  const auto& um = std::get<UnitaryGeneratorMap>(map);
  const Eigen::MatrixXcd m = evaluate(um, w);
  const Eigen::MatrixXcd id =
      Eigen::MatrixXcd::Identity(um.dimension(), um.dimension());
  switch (metric) {
    case MetricKind::HS:
      return hs_distance(m, id);
    case MetricKind::Frobenius:
      return frobenius(m, id);
    default:
      throw input_error("permutation-style metrics need permutation challenge items");
  }
}

int count_mismatches(const Permutation& a, const Permutation& b, int upto) {
  int m = 0;
  for (int x = 0; x < upto; ++x) m += a(x) != b(x);
  return m;
}

// Distance between one generator image of a challenge item and the matching
// image of a candidate solution.
double solution_generator_distance(const GeneratorMap& item, int s,
                                   const GeneratorMap& sol, MetricKind metric) {
  const auto* ip = std::get_if<PermGeneratorMap>(&item);
  const auto* sp = std::get_if<PermGeneratorMap>(&sol);
  if (metric == MetricKind::Flex || metric == MetricKind::VeryFlex) {
    if (ip == nullptr || sp == nullptr)
      throw input_error("flex metrics need permutation data on both sides");
    return flex_distance(ip->image(s), sp->image(s), metric == MetricKind::VeryFlex);
  }
  if (ip != nullptr && sp != nullptr) {
    switch (metric) {
      case MetricKind::Hamming:
        return hamming(ip->image(s), sp->image(s));
      case MetricKind::HS:
        return std::sqrt(2.0 * hamming(ip->image(s), sp->image(s)));
      case MetricKind::Frobenius:
        return std::sqrt(2.0 * hamming(ip->image(s), sp->image(s)) * ip->degree());
      default:
        break;
    }
  }
  if (metric == MetricKind::Hamming)
    throw input_error("hamming distances need permutation data on both sides");
  const Eigen::MatrixXcd a =
      ip ? embed_permutation(ip->image(s)) : std::get<UnitaryGeneratorMap>(item).image(s);
  const Eigen::MatrixXcd b =
      sp ? embed_permutation(sp->image(s)) : std::get<UnitaryGeneratorMap>(sol).image(s);
  return metric == MetricKind::HS ? hs_distance(a, b) : frobenius(a, b);
}

void require_relator_exact(const GeneratorMap& sol, const std::vector<Word>& relators,
                           int index) {
  for (const Word& r : relators) {
    if (const auto* pm = std::get_if<PermGeneratorMap>(&sol)) {
      if (!evaluate(*pm, r).is_identity())
        throw non_solution_error("candidate at index " + std::to_string(index) +
                                     " does not kill relator " + r.str(),
                                 index, r.str());
    } else {
      const auto& um = std::get<UnitaryGeneratorMap>(sol);
      const Eigen::MatrixXcd m = evaluate(um, r);
      const int n = um.dimension();
      if ((m - Eigen::MatrixXcd::Identity(n, n)).norm() > comparison_tolerance(n))
        throw non_solution_error("candidate at index " + std::to_string(index) +
                                     " does not kill relator " + r.str(),
                                 index, r.str());
    }
  }
}

struct PairGap {
  bool computed = false;
  bool infinite = false;
  double lambda1 = 0;
  double kappa = 0;
};

// Smallest nonzero eigenvalue of the pair-action Laplacian
// sum_s (2I - P_s - P_s^T), block-diagonalized over the pair orbits. Blocks
// larger than `cap` make the answer unknown.
PairGap pair_action_gap(const PairOrbitDecomposition& d, const PermAction& beta,
                        const PermAction& alpha, int cap) {
  const int n = alpha.degree();
  std::vector<std::vector<int>> members(d.orbits.size());
  for (int b0 = 0; b0 < d.b0_size; ++b0)
    for (int b = 0; b < d.b_size; ++b)
      members[d.orbit_of(b0, b)].push_back(b0 * n + b);

  PairGap out;
  double lambda1 = std::numeric_limits<double>::infinity();
  bool any_block = false;
  for (const auto& orbit : members) {
    const int m = static_cast<int>(orbit.size());
    if (m < 2) continue;
    if (m > cap) return out;  // not computed
    any_block = true;
    std::vector<int> local(d.b0_size * d.b_size, -1);
    for (int i = 0; i < m; ++i) local[orbit[i]] = i;
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(m, m);
    for (int s = 0; s < beta.num_generators(); ++s) {
      const Permutation& bs = beta.generator(s);
      const Permutation& as = alpha.generator(s);
      for (int i = 0; i < m; ++i) {
        const int b0 = orbit[i] / n;
        const int b = orbit[i] % n;
        const int j = local[bs(b0) * n + as(b)];
        lap(i, i) += 2.0;
        lap(i, j) -= 1.0;
        lap(j, i) -= 1.0;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
    lambda1 = std::min(lambda1, std::max(0.0, es.eigenvalues()(1)));
  }
  out.computed = true;
  if (!any_block) {
    out.infinite = true;
    out.lambda1 = std::numeric_limits<double>::infinity();
    out.kappa = std::numeric_limits<double>::infinity();
    return out;
  }
  out.lambda1 = lambda1;
  out.kappa = std::sqrt(lambda1 / beta.num_generators());
  return out;
}

}  // namespace

int map_degree(const GeneratorMap& m) {
  return std::visit([](const auto& x) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, PermGeneratorMap>)
      return x.degree();
    else
      return x.dimension();
  }, m);
}

int map_alphabet(const GeneratorMap& m) {
  return std::visit([](const auto& x) { return x.alphabet_size(); }, m);
}

RestrictedAction restrict_action(const PermAction& action, TargetKind kind) {
  if (action.degree() < 2)
    throw input_error("restrict_action: need at least two points");
  if (action.num_generators() < 1)
    throw input_error("restrict_action: need at least one generator");
  std::vector<double> rdef, idef;
  if (kind == TargetKind::Permutation) {
    std::vector<Permutation> images;
    for (const Permutation& g : action.generators()) {
      PermRepair r = repair_permutation(g);
      rdef.push_back(r.restriction_defect);
      idef.push_back(r.inclusion_defect);
      images.push_back(std::move(r.a0));
    }
    return RestrictedAction{PermGeneratorMap(std::move(images)), std::move(rdef),
                            std::move(idef), action.degree()};
  }
  std::vector<Eigen::MatrixXcd> images;
  for (const Permutation& g : action.generators()) {
    UnitaryRepair r = repair_unitary(embed_permutation(g));
    rdef.push_back(r.restriction_defect);
    idef.push_back(r.inclusion_defect);
    images.push_back(std::move(r.a0));
  }
  return RestrictedAction{UnitaryGeneratorMap(std::move(images)), std::move(rdef),
                          std::move(idef), action.degree()};
}

RestrictedAction restrict_action(const UnitaryGeneratorMap& rep) {
  if (rep.dimension() < 2)
    throw input_error("restrict_action: need dimension >= 2");
  std::vector<double> rdef, idef;
  std::vector<Eigen::MatrixXcd> images;
  for (const Eigen::MatrixXcd& m : rep.images()) {
    UnitaryRepair r = repair_unitary(m);
    rdef.push_back(r.restriction_defect);
    idef.push_back(r.inclusion_defect);
    images.push_back(std::move(r.a0));
  }
  return RestrictedAction{UnitaryGeneratorMap(std::move(images)), std::move(rdef),
                          std::move(idef), rep.dimension()};
}

PermGeneratorMap restrict_to_subset(const PermAction& action,
                                    const std::vector<int>& subset,
                                    std::uint64_t seed) {
  const int n = action.degree();
  std::vector<int> y = subset;
  std::sort(y.begin(), y.end());
  if (y.empty()) throw input_error("restrict_to_subset: empty subset");
  if (y.front() < 0 || y.back() >= n)
    throw input_error("restrict_to_subset: subset point out of range");
  if (std::adjacent_find(y.begin(), y.end()) != y.end())
    throw input_error("restrict_to_subset: repeated subset point");
  const int k = static_cast<int>(y.size());
  std::vector<int> pos(n, -1);
  for (int j = 0; j < k; ++j) pos[y[j]] = j;

  Rng rng(seed);
  std::vector<Permutation> images;
  for (const Permutation& g : action.generators()) {
    std::vector<int> img(k, -1);
    std::vector<char> used(k, 0);
    for (int j = 0; j < k; ++j) {
      const int x = g(y[j]);
      if (pos[x] >= 0) {
        img[j] = pos[x];
        used[pos[x]] = 1;
      }
    }
    std::vector<int> free_sources, free_targets;
    for (int j = 0; j < k; ++j)
      if (img[j] < 0) free_sources.push_back(j);
    for (int q = 0; q < k; ++q)
      if (!used[q]) free_targets.push_back(q);
    for (int i = static_cast<int>(free_targets.size()) - 1; i > 0; --i)
      std::swap(free_targets[i], free_targets[rand_below(rng, i + 1)]);
    for (size_t i = 0; i < free_sources.size(); ++i)
      img[free_sources[i]] = free_targets[i];
    images.emplace_back(std::move(img));
  }
  return PermGeneratorMap(std::move(images));
}

Challenge build_challenge(const std::vector<PermAction>& family,
                          const std::vector<Word>& relators, TargetKind kind) {
  if (family.empty()) throw input_error("build_challenge: empty family");
  for (size_t i = 1; i < family.size(); ++i)
    if (family[i].degree() <= family[i - 1].degree())
      throw input_error("build_challenge: family degrees must be strictly increasing");
  Challenge c;
  c.relators = relators;
  for (const PermAction& action : family) {
    RestrictedAction r = restrict_action(action, kind);
    ChallengeItem item{std::move(r.rho), action,
                       {action.degree() - 1},
                       std::move(r.restriction_defects),
                       std::move(r.inclusion_defects),
                       std::nullopt};
    c.items.push_back(std::move(item));
  }
  return c;
}

Challenge challenge_from_maps(std::vector<GeneratorMap> maps,
                              const std::vector<Word>& relators,
                              const std::vector<int>& claimed_source_degrees) {
  if (maps.empty()) throw input_error("challenge_from_maps: empty map list");
  if (!claimed_source_degrees.empty() && claimed_source_degrees.size() != maps.size())
    throw input_error("challenge_from_maps: claimed source degree list size mismatch");
  for (size_t i = 1; i < maps.size(); ++i)
    if (map_degree(maps[i]) < map_degree(maps[i - 1]))
      throw input_error("challenge_from_maps: degrees must be nondecreasing");
  Challenge c;
  c.relators = relators;
  for (size_t i = 0; i < maps.size(); ++i) {
    ChallengeItem item{std::move(maps[i]), std::nullopt, {}, {}, {}, std::nullopt};
    // Zero means no claim about where the item came from.
    if (!claimed_source_degrees.empty() && claimed_source_degrees[i] != 0) {
      if (claimed_source_degrees[i] <= map_degree(item.map))
        throw input_error("challenge_from_maps: claimed source degree must exceed the item degree");
      item.claimed_source_degree = claimed_source_degrees[i];
    }
    c.items.push_back(std::move(item));
  }
  return c;
}

DefectReport evaluate_defects(const Challenge& c, const std::vector<Word>& words,
                              MetricKind metric) {
  DefectReport r;
  r.words = words;
  for (const ChallengeItem& item : c.items) {
    std::vector<double> defects, hs_defects, bounds, ratios;
    for (const Word& w : words) {
      defects.push_back(word_defect(item.map, w, metric));
      const double hs = word_defect(item.map, w, MetricKind::HS);
      hs_defects.push_back(hs);
      if (item.restriction_built()) {
        const double bound =
            std::pow(3.0, w.length()) / std::sqrt(static_cast<double>(item.degree()));
        bounds.push_back(bound);
        const double ratio = hs / bound;
        ratios.push_back(ratio);
        r.max_ratio = std::max(r.max_ratio, ratio);
        if (ratio > 1.0 + kSlack) r.bound_violated = true;
      }
    }
    r.defects.push_back(std::move(defects));
    r.hs_defects.push_back(std::move(hs_defects));
    r.bounds.push_back(std::move(bounds));
    r.ratios.push_back(std::move(ratios));
  }
  return r;
}

bool trend_toward(const std::vector<double>& xs, double limit, double threshold,
                  double slack) {
  if (xs.empty()) return false;
  std::vector<double> dev;
  dev.reserve(xs.size());
  for (double x : xs) dev.push_back(std::abs(x - limit));
  if (dev.back() > threshold) return false;
  for (size_t i = xs.size() / 2; i + 1 < xs.size(); ++i)
    if (dev[i + 1] > dev[i] * slack + 1e-12) return false;
  return true;
}

SolutionReport evaluate_solution(const Challenge& c,
                                 const std::vector<GeneratorMap>& g,
                                 MetricKind metric, const TrendPolicy& policy) {
  if (g.size() != c.items.size())
    throw input_error("evaluate_solution: need one candidate per challenge index");
  const bool flexible = metric == MetricKind::Flex || metric == MetricKind::VeryFlex;
  SolutionReport out;
  for (size_t k = 0; k < c.items.size(); ++k) {
    const ChallengeItem& item = c.items[k];
    const GeneratorMap& sol = g[k];
    if (map_alphabet(sol) != map_alphabet(item.map))
      throw input_error("evaluate_solution: alphabet mismatch at index " +
                        std::to_string(k));
    require_relator_exact(sol, c.relators, static_cast<int>(k));
    const int nk = item.degree();
    const int m = map_degree(sol);
    if (flexible) {
      if (m < nk)
        throw input_error("evaluate_solution: flex candidate degree below the item degree at index " +
                          std::to_string(k));
    } else if (m != nk) {
      throw input_error("evaluate_solution: candidate degree " + std::to_string(m) +
                        " does not match item degree " + std::to_string(nk) +
                        " at index " + std::to_string(k));
    }
    std::vector<double> per_gen;
    double sum = 0;
    for (int s = 0; s < map_alphabet(item.map); ++s) {
      const double d = solution_generator_distance(item.map, s, sol, metric);
      per_gen.push_back(d);
      sum += d;
    }
    out.generator_distances.push_back(std::move(per_gen));
    out.sum_distances.push_back(sum);
    out.padding.push_back(m - nk);
  }
  out.trend_to_zero = trend_toward(out.sum_distances, 0.0, policy.threshold_zero,
                                   policy.monotone_slack);
  return out;
}

SoficReport is_sofic_approximation(const Challenge& c,
                                   const std::vector<Word>& kernel_words,
                                   const std::vector<Word>& non_kernel_words,
                                   MetricKind metric, const TrendPolicy& policy) {
  if (kernel_words.empty() || non_kernel_words.empty())
    throw input_error("is_sofic_approximation: both word lists must be nonempty");
  for (const Word& kw : kernel_words)
    for (const Word& nw : non_kernel_words)
      if (kw == nw)
        throw input_error("is_sofic_approximation: word lists overlap at " + kw.str());

  SoficReport out;
  for (const ChallengeItem& item : c.items) {
    double kmax = 0;
    for (const Word& w : kernel_words)
      kmax = std::max(kmax, word_defect(item.map, w, metric));
    double nmin = std::numeric_limits<double>::infinity();
    for (const Word& w : non_kernel_words)
      nmin = std::min(nmin, word_defect(item.map, w, metric));
    out.kernel_max_defect.push_back(kmax);
    out.non_kernel_min_defect.push_back(nmin);
  }
  out.kernel_pass = trend_toward(out.kernel_max_defect, 0.0, policy.threshold_zero,
                                 policy.monotone_slack);
  out.non_kernel_pass = trend_toward(out.non_kernel_min_defect, 1.0,
                                     1.0 - policy.threshold_one, policy.monotone_slack);
  out.pass = out.kernel_pass && out.non_kernel_pass;
  return out;
}

namespace {

PipelineReport pipeline_impl(const Challenge& c, MetricKind metric,
                             const PipelineOptions& opt) {
  PipelineReport rep;
  const bool flexible = metric == MetricKind::Flex || metric == MetricKind::VeryFlex;

  if (opt.defects) {
    rep.words = sample_kernel_words(c.relators, opt.kernel_max_len, opt.kernel_count,
                                    opt.seed);
    rep.defects = evaluate_defects(c, rep.words, metric);
    if (rep.defects.bound_violated)
      push_violation(rep.violations, "defect-ratio-bound");
  }
  if (opt.solution && opt.solution->size() != c.items.size())
    throw input_error("run_pipeline: need one supplied solution per index");

  for (size_t k = 0; k < c.items.size(); ++k) {
    const ChallengeItem& item = c.items[k];
    PipelineIndexReport ir;
    ir.index = static_cast<int>(k);
    ir.degree = item.degree();
    ir.source_degree = item.source ? item.source->degree()
                                   : item.claimed_source_degree.value_or(0);
    ir.restriction_defects = item.restriction_defects;
    ir.almost_equivariance = item.inclusion_defects;
    for (double d : ir.restriction_defects)
      if (d > 1.0 + kSlack) push_violation(rep.violations, "restriction-defect-bound");
    for (double d : ir.almost_equivariance)
      if (d > 2.0 + kSlack) push_violation(rep.violations, "equivariance-defect-bound");
    if (opt.defects) {
      for (double d : rep.defects.defects[k]) ir.max_defect = std::max(ir.max_defect, d);
      for (double d : rep.defects.ratios[k])
        ir.max_bound_ratio = std::max(ir.max_bound_ratio, d);
    }

    if (opt.projection && item.source) {
      const PermAction& alpha = *item.source;
      ir.transitive_source = alpha.is_transitive();
      const PermAction beta = patched_restriction(alpha);
      const PairOrbitDecomposition d = pair_orbits(beta, alpha);
      const auto proj = project_to_intertwiner_permutation(
          inclusion_matrix(alpha.degree(), beta.degree()), d);
      ir.residual = proj.residual;
      ir.residual_sq = proj.residual * proj.residual;
      ir.residual_sq_closed = proj.closed_form_residual_sq.value_or(0.0);
      ir.residual_floor = std::sqrt(beta.degree() / 2.0);
      ir.projection_done = true;
      if (std::abs(ir.residual_sq - ir.residual_sq_closed) >
          1e-9 * std::max(1.0, static_cast<double>(beta.degree())))
        push_violation(rep.violations, "residual-closed-form");
      if (ir.transitive_source) {
        if (ir.residual < ir.residual_floor - kSlack)
          push_violation(rep.violations, "residual-floor");
        try {
          ir.min_orbit_margin = check_orbit_growth(d, true).min_margin;
        } catch (const claim_violation& v) {
          push_violation(rep.violations, v.inequality_name);
        }
      }
    }

    // Candidate solution: supplied, or searched for on small degrees.
    std::optional<PermGeneratorMap> oracle_sol;
    const PermGeneratorMap* sol = nullptr;
    if (opt.solution) {
      sol = &(*opt.solution)[k];
      ir.solution_source = "supplied";
    } else if (opt.oracle) {
      if (const auto* pm = std::get_if<PermGeneratorMap>(&item.map)) {
        const int cap = opt.max_target_degree > 0
                            ? opt.max_target_degree
                            : (flexible ? item.degree() + 2 : item.degree());
        try {
          oracle_sol = nearest_homomorphism_bruteforce(*pm, c.relators, metric, cap).best;
          sol = &*oracle_sol;
          ir.solution_source = "oracle";
        } catch (const budget_error& e) {
          ir.note = e.what();
        }
      } else {
        ir.note = "oracle skipped: unitary challenge item";
      }
    }

    if (sol != nullptr) {
      GeneratorMap sol_map{*sol};
      require_relator_exact(sol_map, c.relators, static_cast<int>(k));
      const int nk = item.degree();
      const int m = sol->degree();
      if (flexible) {
        if (m < nk)
          throw input_error("run_pipeline: flex candidate degree below the item degree");
      } else if (m != nk) {
        throw input_error("run_pipeline: candidate degree " + std::to_string(m) +
                          " does not match item degree " + std::to_string(nk));
      }
      ir.solution_degree = m;
      double sum = 0;
      for (int s = 0; s < map_alphabet(item.map); ++s)
        sum += solution_generator_distance(item.map, s, sol_map, metric);
      ir.solution_distance = sum;
      ir.solution_checked = true;

      // Spectral-gap side: exact-degree permutation solutions over a known
      // source action.
      if (m == nk && item.source) {
        const PermAction& alpha = *item.source;
        const PermAction rho_t(nk, sol->images());
        const PairOrbitDecomposition d2 = pair_orbits(rho_t, alpha);
        const auto proj2 = project_to_intertwiner_permutation(
            inclusion_matrix(alpha.degree(), nk), d2);
        ir.solution_residual = proj2.residual;

        double eps_a = 0;
        double max_sol_dist = 0;
        for (int s = 0; s < alpha.num_generators(); ++s) {
          const int mm = count_mismatches(sol->image(s), alpha.generator(s), nk);
          eps_a = std::max(eps_a, std::sqrt(2.0 * mm / nk));
          double dd;
          if (const auto* pm = std::get_if<PermGeneratorMap>(&item.map))
            dd = std::sqrt(2.0 * hamming(sol->image(s), pm->image(s)));
          else
            dd = hs_distance(embed_permutation(sol->image(s)),
                             std::get<UnitaryGeneratorMap>(item.map).image(s));
          max_sol_dist = std::max(max_sol_dist, dd);
        }
        ir.eps_actual = eps_a;
        ir.eps_chain = 2.0 / std::sqrt(static_cast<double>(nk)) + max_sol_dist;
        if (ir.eps_actual > ir.eps_chain + kSlack)
          push_violation(rep.violations, "equivariance-chain");
        if (alpha.is_transitive() && nk < alpha.degree()) {
          if (proj2.residual < std::sqrt(nk / 2.0) - kSlack)
            push_violation(rep.violations, "residual-floor");
          try {
            check_orbit_growth(d2, true);
          } catch (const claim_violation& v) {
            push_violation(rep.violations, v.inequality_name);
          }
        }
        const PairGap gap = pair_action_gap(d2, rho_t, alpha, opt.kazhdan_block_cap);
        if (gap.computed) {
          ir.kazhdan_done = true;
          ir.kazhdan_infinite = gap.infinite;
          ir.kazhdan_hat = gap.kappa;
          const double relres = proj2.residual / std::sqrt(static_cast<double>(nk));
          if (gap.infinite) {
            // Everything is invariant, so the projection must recover f.
            if (relres > kSlack) push_violation(rep.violations, "invariant-gap-bound");
            ir.morphism_gap_bound = 0;
            ir.contradiction_margin = 1.0 / std::sqrt(2.0);
          } else if (gap.kappa > 0) {
            ir.morphism_gap_bound = ir.eps_chain / gap.kappa;
            ir.contradiction_margin = 1.0 / std::sqrt(2.0) - ir.morphism_gap_bound;
            if (relres > ir.eps_actual / gap.kappa + kSlack)
              push_violation(rep.violations, "invariant-gap-bound");
          }
        } else if (!ir.note.empty()) {
          ir.note += "; spectral gap skipped (pair orbit above block cap)";
        } else {
          ir.note = "spectral gap skipped (pair orbit above block cap)";
        }
      }
    }
    rep.items.push_back(std::move(ir));
  }

  if (opt.sofic_check) {
    if (opt.non_kernel_words.empty())
      throw input_error("run_pipeline: sofic check requires non-kernel words");
    const std::vector<Word>& kernel =
        rep.words.empty() ? c.relators : rep.words;
    rep.sofic = is_sofic_approximation(c, kernel, opt.non_kernel_words, metric,
                                       opt.trend);
  }
  return rep;
}

}  // namespace

PipelineReport run_pipeline(const std::vector<PermAction>& family,
                            const std::vector<Word>& relators, MetricKind metric,
                            const PipelineOptions& options) {
  const TargetKind kind =
      (metric == MetricKind::HS || metric == MetricKind::Frobenius)
          ? TargetKind::Unitary
          : TargetKind::Permutation;
  return pipeline_impl(build_challenge(family, relators, kind), metric, options);
}

PipelineReport run_pipeline(const Challenge& c, MetricKind metric,
                            const PipelineOptions& options) {
  return pipeline_impl(c, metric, options);
}

}  // namespace gsw
