// gsw -- command-line front end for the group stability workbench.
//
// Exit codes: 0 clean run, 1 a checked claim or candidate failed,
// 2 bad input (spec errors, missing files, search budget).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gsw/challenges.hpp"
#include "gsw/checks.hpp"
#include "gsw/chevalley.hpp"
#include "gsw/errors.hpp"
#include "gsw/experiment.hpp"
#include "gsw/nearness.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw gsw::input_error("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string image_list(const gsw::Permutation& p) {
  std::string s = "[";
  for (int x = 0; x < p.degree(); ++x) {
    if (x) s += ' ';
    s += std::to_string(p(x));
  }
  return s + "]";
}

int cmd_challenge_run(const std::string& path, const std::string& csv_override) {
  gsw::ExperimentSpec spec = gsw::parse_spec(slurp(path));
  if (!csv_override.empty()) spec.output_csv = csv_override;
  const gsw::ExperimentResult res = gsw::run_experiment(spec);
  const gsw::PipelineReport& rep = res.report;

  if (!rep.words.empty()) {
    int longest = 0;
    for (const gsw::Word& w : rep.words) longest = std::max(longest, w.length());
    std::printf("kernel words: %zu (longest %d letters)\n", rep.words.size(), longest);
  }
  for (const gsw::PipelineIndexReport& ir : rep.items) {
    std::printf("index %d: degree %d", ir.index, ir.degree);
    if (ir.source_degree > 0) std::printf(", source degree %d", ir.source_degree);
    if (ir.max_defect > 0 || !rep.words.empty())
      std::printf(", max word defect %.6g", ir.max_defect);
    if (ir.max_bound_ratio > 0)
      std::printf(", max defect/bound %.6g", ir.max_bound_ratio);
    if (ir.projection_done)
      std::printf(", residual %.6g (floor %.6g)", ir.residual, ir.residual_floor);
    if (ir.solution_checked)
      std::printf(", %s solution at distance %.6g", ir.solution_source.c_str(),
                  ir.solution_distance);
    if (ir.kazhdan_done) {
      if (ir.kazhdan_infinite)
        std::printf(", spectral gap unbounded");
      else
        std::printf(", kappa %.6g, contradiction margin %.6g", ir.kazhdan_hat,
                    ir.contradiction_margin);
    }
    if (!ir.note.empty()) std::printf(" [%s]", ir.note.c_str());
    std::printf("\n");
  }
  if (rep.sofic) {
    std::printf("sofic check: kernel %s, separation %s\n",
                rep.sofic->kernel_pass ? "ok" : "FAIL",
                rep.sofic->non_kernel_pass ? "ok" : "FAIL");
  }
  if (!spec.output_csv.empty()) std::printf("csv written to %s\n", spec.output_csv.c_str());
  if (rep.violations.empty()) {
    std::printf("all checked claims hold\n");
  } else {
    for (const std::string& v : rep.violations)
      std::printf("VIOLATED: %s\n", v.c_str());
  }
  return res.exit_code;
}

int cmd_chevalley_steinberg(const std::string& desc, std::vector<int> qs) {
  const gsw::SemisimpleProduct g = gsw::parse_semisimple(desc);
  if (qs.empty()) qs = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27};
  std::sort(qs.begin(), qs.end());

  std::string degrees;
  for (int d : g.degrees()) degrees += (degrees.empty() ? "" : " ") + std::to_string(d);
  std::printf("factors: %s\n", desc.c_str());
  std::printf("invariant degrees: %s\n", degrees.c_str());
  std::printf("positive roots: %d, weyl order: %s\n", g.positive_roots(),
              g.weyl_order().str().c_str());
  std::printf("length generating polynomial: %s\n", g.poincare().str().c_str());
  for (int qi : qs) {
    const gsw::BigInt q(qi);
    const gsw::BigRational r = g.steinberg(q);
    std::printf("q=%-6d order=%s\n", qi, g.group_order(q).str().c_str());
    std::printf("          steinberg=%s/%s ~ %.12f\n",
                boost::multiprecision::numerator(r).str().c_str(),
                boost::multiprecision::denominator(r).str().c_str(),
                r.convert_to<double>());
  }
  return 0;
}

int cmd_oracle_nearest(const std::string& path, int max_degree) {
  const gsw::ExperimentSpec spec = gsw::parse_spec(slurp(path));
  const std::vector<gsw::Word> relators = [&] {
    std::vector<gsw::Word> out;
    for (const auto& row : spec.relators)
      out.push_back(gsw::Word::from_signed(row, spec.generators));
    return out;
  }();

  gsw::Challenge c;
  if (!spec.actions.empty()) {
    c = gsw::build_challenge(gsw::expand_actions(spec), relators,
                             gsw::TargetKind::Permutation);
  } else {
    std::vector<gsw::GeneratorMap> maps;
    for (const gsw::ChallengeItemSpec& item : spec.challenge) {
      std::vector<gsw::Permutation> imgs;
      for (const auto& img : item.images) imgs.emplace_back(img);
      maps.emplace_back(gsw::PermGeneratorMap(std::move(imgs)));
    }
    c = gsw::challenge_from_maps(std::move(maps), relators);
  }

  bool flexible = spec.metric == gsw::MetricKind::Flex ||
                  spec.metric == gsw::MetricKind::VeryFlex;
  for (size_t k = 0; k < c.items.size(); ++k) {
    const auto& pm = std::get<gsw::PermGeneratorMap>(c.items[k].map);
    const int cap = max_degree > 0 ? max_degree
                                   : (flexible ? pm.degree() + 2 : pm.degree());
    const gsw::NearestHomomorphism nh =
        gsw::nearest_homomorphism_bruteforce(pm, relators, spec.metric, cap);
    std::printf("index %zu: distance %.17g at target degree %d\n", k, nh.distance,
                nh.target_degree);
    for (int s = 0; s < nh.best.alphabet_size(); ++s)
      std::printf("  generator %d -> %s\n", s, image_list(nh.best.image(s)).c_str());
  }
  return 0;
}

int cmd_check_lemmas(std::uint64_t seed, int trials) {
  const std::vector<gsw::CheckResult> results = gsw::run_lemma_checks(seed, trials);
  bool all_ok = true;
  for (const gsw::CheckResult& r : results) {
    if (r.ok) {
      std::printf("ok   %s (%d trials)\n", r.name.c_str(), r.trials);
    } else {
      all_ok = false;
      std::printf("FAIL %s: %s\n", r.name.c_str(), r.detail.c_str());
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"group stability workbench"};
  app.require_subcommand(1);

  std::string spec_path, csv_override, chev_desc;
  std::vector<int> qs;
  int max_degree = 0;
  std::uint64_t seed = 1;
  int trials = 25;

  CLI::App* challenge = app.add_subcommand("challenge", "restriction challenges");
  challenge->require_subcommand(1);
  CLI::App* crun = challenge->add_subcommand("run", "run an experiment spec");
  crun->add_option("spec", spec_path, "JSON experiment spec")->required();
  crun->add_option("--csv", csv_override, "write the summary table here");

  CLI::App* chev = app.add_subcommand("chevalley", "finite groups of Lie type");
  chev->require_subcommand(1);
  CLI::App* steinberg = chev->add_subcommand("steinberg", "orders and top-cell ratios");
  steinberg->add_option("group", chev_desc, "factors, e.g. A2 or A1xB3")->required();
  steinberg->add_option("--q", qs, "field sizes")->delimiter(',');

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference searches");
  oracle->require_subcommand(1);
  CLI::App* nearest = oracle->add_subcommand("nearest", "closest relator-exact map");
  nearest->add_option("spec", spec_path, "JSON experiment spec")->required();
  nearest->add_option("--max-degree", max_degree, "largest target degree to try");

  CLI::App* check = app.add_subcommand("check", "randomized self-tests");
  check->require_subcommand(1);
  CLI::App* lemmas = check->add_subcommand("lemmas", "verify the library's inequalities");
  lemmas->add_option("--seed", seed, "stream seed");
  lemmas->add_option("--trials", trials, "trials per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (crun->parsed()) return cmd_challenge_run(spec_path, csv_override);
    if (steinberg->parsed()) return cmd_chevalley_steinberg(chev_desc, qs);
    if (nearest->parsed()) return cmd_oracle_nearest(spec_path, max_degree);
    if (lemmas->parsed()) return cmd_check_lemmas(seed, trials);
  } catch (const gsw::claim_violation& e) {
    std::cerr << "claim failed: " << e.what() << "\n";
    return 1;
  } catch (const gsw::non_solution_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gsw::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
