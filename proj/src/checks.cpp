#include "gsw/checks.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "gsw/actions.hpp"
#include "gsw/challenges.hpp"
#include "gsw/chevalley.hpp"
#include "gsw/errors.hpp"
#include "gsw/metrics.hpp"
#include "gsw/nearness.hpp"
#include "gsw/prng.hpp"

namespace gsw {

namespace {

using Failure = std::optional<std::string>;

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

Permutation random_perm(Rng& rng, int n) {
  return Permutation(random_permutation_images(rng, n));
}

PermAction random_action(Rng& rng, int degree, int generators) {
  std::vector<Permutation> imgs;
  for (int s = 0; s < generators; ++s) imgs.push_back(random_perm(rng, degree));
  return PermAction(degree, std::move(imgs));
}

PermAction patched(const PermAction& alpha) {
  std::vector<Permutation> imgs;
  for (const Permutation& g : alpha.generators())
    imgs.push_back(repair_permutation(g).a0);
  return PermAction(alpha.degree() - 1, std::move(imgs));
}

Eigen::MatrixXd inclusion(int b, int b0) {
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(b, b0);
  for (int x = 0; x < b0; ++x) f(x, x) = 1.0;
  return f;
}

Failure check_inverse_isometry(Rng& rng) {
  const int n = 2 + static_cast<int>(rand_below(rng, 5));
  const Eigen::MatrixXcd a = random_unitary(rng, n);
  const Eigen::MatrixXcd b = random_unitary(rng, n);
  const double lhs = frobenius(a.adjoint(), b.adjoint());
  const double rhs = frobenius(a, b);
  if (std::abs(lhs - rhs) > comparison_tolerance(n))
    return "||A^-1 - B^-1|| = " + num(lhs) + " but ||A - B|| = " + num(rhs);
  return std::nullopt;
}

Failure check_bi_invariance(Rng& rng) {
  const int n = 3 + static_cast<int>(rand_below(rng, 5));
  const Permutation s = random_perm(rng, n), t = random_perm(rng, n);
  const Permutation g = random_perm(rng, n), h = random_perm(rng, n);
  const double d0 = hamming(s, t);
  const double d1 = hamming(g.compose(s).compose(h), g.compose(t).compose(h));
  if (std::abs(d0 - d1) > 1e-15)
    return "hamming moved under translation: " + num(d0) + " vs " + num(d1);
  const Eigen::MatrixXcd a = random_unitary(rng, n), b = random_unitary(rng, n);
  const Eigen::MatrixXcd u = random_unitary(rng, n), v = random_unitary(rng, n);
  const double e0 = hs_distance(a, b);
  const double e1 = hs_distance(u * a * v, u * b * v);
  if (std::abs(e0 - e1) > comparison_tolerance(n))
    return "hs moved under translation: " + num(e0) + " vs " + num(e1);
  return std::nullopt;
}

Failure check_embedding(Rng& rng) {
  const int n = 2 + static_cast<int>(rand_below(rng, 6));
  const Permutation s = random_perm(rng, n), t = random_perm(rng, n);
  const Eigen::MatrixXcd prod = embed_permutation(s.compose(t));
  if ((embed_permutation(s) * embed_permutation(t) - prod).norm() > 1e-12)
    return "embedding is not multiplicative at degree " + std::to_string(n);
  const double lhs = hs_distance(embed_permutation(s), embed_permutation(t));
  const double rhs = std::sqrt(2.0 * hamming(s, t));
  if (std::abs(lhs - rhs) > comparison_tolerance(n))
    return "hs(iota s, iota t) = " + num(lhs) + " but sqrt(2 hamming) = " + num(rhs);
  return std::nullopt;
}

Failure check_perm_restriction(Rng& rng) {
  const int n = 2 + static_cast<int>(rand_below(rng, 8));
  const Permutation t = random_perm(rng, n);
  const PermRepair r = repair_permutation(t);
  if (r.restriction_defect != 0.0 && r.restriction_defect != 1.0)
    return "restriction defect " + num(r.restriction_defect) + " is not 0 or 1";
  if (r.inclusion_defect > 2.0 + 1e-12)
    return "inclusion defect " + num(r.inclusion_defect) + " exceeds 2";
  // Recompute the defect from the embedded matrices.
  const Eigen::MatrixXcd top =
      embed_permutation(t).topLeftCorner(n - 1, n - 1);
  const double direct = (top - embed_permutation(r.a0)).norm();
  if (std::abs(direct - r.restriction_defect) > 1e-12)
    return "restriction defect " + num(r.restriction_defect) +
           " disagrees with the matrix norm " + num(direct);
  return std::nullopt;
}

Failure check_unitary_restriction(Rng& rng) {
  const int n = 2 + static_cast<int>(rand_below(rng, 5));
  const UnitaryRepair r = repair_unitary(random_unitary(rng, n));
  if (std::abs(r.restriction_defect - r.predicted_defect) > 1e-9)
    return "defect " + num(r.restriction_defect) + " vs predicted " +
           num(r.predicted_defect);
  if (r.inclusion_defect > 2.0 + 1e-9)
    return "inclusion defect " + num(r.inclusion_defect) + " exceeds 2";
  const int m = n - 1;
  if ((r.a0.adjoint() * r.a0 - Eigen::MatrixXcd::Identity(m, m)).norm() >
      comparison_tolerance(m))
    return "repaired matrix is not unitary at dimension " + std::to_string(m);
  return std::nullopt;
}

Failure check_product_perturbation(Rng& rng) {
  const int n = 2 + static_cast<int>(rand_below(rng, 4));
  const int l = 1 + static_cast<int>(rand_below(rng, 4));
  const double c = 0.3 + rand_unit(rng);
  std::vector<Eigen::MatrixXcd> u, e;
  for (int i = 0; i < l; ++i) {
    u.push_back(random_unitary(rng, n));
    Eigen::MatrixXcd noise = Eigen::MatrixXcd::Zero(n, n);
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col)
        noise(r, col) = std::complex<double>(rand_normal(rng), rand_normal(rng));
    noise *= (c * rand_unit(rng)) / noise.norm();
    e.push_back(noise);
  }
  const PerturbationReport rep = perturbation_bound_check(u, e, c);
  if (!rep.holds)
    return "product moved by " + num(rep.lhs) + " against bound " + num(rep.bound);
  return std::nullopt;
}

Failure check_orbit_growth_random(Rng& rng) {
  const int n = 4 + static_cast<int>(rand_below(rng, 6));
  const int gens = 1 + static_cast<int>(rand_below(rng, 3));
  const PermAction alpha = random_transitive_action(rng, n, gens - 1);
  const PairOrbitDecomposition d = pair_orbits(patched(alpha), alpha);
  try {
    check_orbit_growth(d, true);
  } catch (const claim_violation& v) {
    return std::string(v.what());
  }
  return std::nullopt;
}

Failure check_residual_floor(Rng& rng) {
  const int n = 4 + static_cast<int>(rand_below(rng, 6));
  const int gens = 1 + static_cast<int>(rand_below(rng, 3));
  const PermAction alpha = random_transitive_action(rng, n, gens - 1);
  const PermAction beta = patched(alpha);
  const PairOrbitDecomposition d = pair_orbits(beta, alpha);
  const auto proj = project_to_intertwiner_permutation(inclusion(n, n - 1), d);
  const double floor = std::sqrt((n - 1) / 2.0);
  if (proj.residual < floor - 1e-9)
    return "residual " + num(proj.residual) + " under the floor " + num(floor);
  if (proj.closed_form_residual_sq &&
      std::abs(proj.residual * proj.residual - *proj.closed_form_residual_sq) > 1e-9)
    return "residual^2 " + num(proj.residual * proj.residual) +
           " disagrees with the orbit formula " + num(*proj.closed_form_residual_sq);
  return std::nullopt;
}

Failure check_invariant_gap(Rng& rng) {
  const int n = 4 + static_cast<int>(rand_below(rng, 4));
  const int gens = 1 + static_cast<int>(rand_below(rng, 2));
  const PermAction alpha = random_transitive_action(rng, n, gens - 1);
  const PermAction beta = patched(alpha);
  const PairOrbitDecomposition d = pair_orbits(beta, alpha);

  // Spectral gap of the pair action, computed from the full Laplacian.
  std::vector<Eigen::MatrixXcd> rho;
  for (int s = 0; s < gens; ++s) {
    const int dim = (n - 1) * n;
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(dim, dim);
    for (int b0 = 0; b0 < n - 1; ++b0)
      for (int b = 0; b < n; ++b)
        p(beta.generator(s)(b0) * n + alpha.generator(s)(b), b0 * n + b) = 1.0;
    rho.push_back(std::move(p));
  }
  const KazhdanEstimate kz = kazhdan_lower_bound(rho);
  if (kz.infinite || kz.kappa_hat <= 0) return std::nullopt;  // bound is vacuous

  const Eigen::MatrixXd f = inclusion(n, n - 1);
  const auto proj = project_to_intertwiner_permutation(f, d);
  double eps = 0;
  for (int s = 0; s < gens; ++s) {
    Eigen::MatrixXd moved(n, n - 1);
    for (int b0 = 0; b0 < n - 1; ++b0)
      for (int b = 0; b < n; ++b)
        moved(alpha.generator(s)(b), beta.generator(s)(b0)) = f(b, b0);
    eps = std::max(eps, (moved - f).norm() / f.norm());
  }
  const double bound = eps / kz.kappa_hat * f.norm();
  if (proj.residual > bound + 1e-9)
    return "residual " + num(proj.residual) + " above the displacement bound " +
           num(bound);
  return std::nullopt;
}

Failure check_kernel_defect_bound(Rng& rng) {
  const int m = 3 + static_cast<int>(rand_below(rng, 3));
  const std::vector<Word> relators = {
      Word::from_signed({1, 2, -1, -2}, 2)};
  const Challenge c =
      build_challenge({z2_torus_action(m)}, relators, TargetKind::Permutation);
  const auto words = sample_kernel_words(relators, 8, 10, rng());
  const DefectReport rep = evaluate_defects(c, words, MetricKind::HS);
  if (rep.bound_violated)
    return "kernel word defect ratio " + num(rep.max_ratio) + " above 1";
  return std::nullopt;
}

Failure check_steinberg(Rng& rng) {
  static const std::vector<WeylData> pool = {
      WeylData::make(LieType::A, 1), WeylData::make(LieType::A, 2),
      WeylData::make(LieType::A, 3), WeylData::make(LieType::B, 2),
      WeylData::make(LieType::C, 3), WeylData::make(LieType::D, 4),
      WeylData::make(LieType::G, 2), WeylData::make(LieType::F, 4)};
  const WeylData& w = pool[rand_below(rng, pool.size())];
  const std::vector<int> qs = {2, 3, 4, 5, 7, 8, 9};
  BigRational prev(0);
  for (int qi : qs) {
    const BigInt q(qi);
    const BigInt lhs = chevalley_group_order(w, q);
    const BigInt rhs = boost::multiprecision::pow(q, positive_root_count(w)) *
                       boost::multiprecision::pow(q - 1, w.rank) *
                       poincare_polynomial(w).eval(q);
    if (lhs != rhs)
      return "order factorization mismatch for " + lie_type_name(w.type) +
             std::to_string(w.rank) + " at q = " + std::to_string(qi);
    const BigRational ratio = steinberg_ratio(w, q);
    if (!(ratio > prev) || !(ratio < 1))
      return "steinberg ratio not strictly increasing below 1 for " +
             lie_type_name(w.type) + std::to_string(w.rank);
    prev = ratio;
  }
  return std::nullopt;
}

struct NamedCheck {
  const char* name;
  std::function<Failure(Rng&)> run;
};

}  // namespace

std::vector<CheckResult> run_lemma_checks(std::uint64_t seed, int trials) {
  if (trials < 1) throw input_error("run_lemma_checks: need at least one trial");
  const std::vector<NamedCheck> checks = {
      {"unitary-inverse-isometry", check_inverse_isometry},
      {"metric-bi-invariance", check_bi_invariance},
      {"permutation-embedding", check_embedding},
      {"permutation-restriction-defect", check_perm_restriction},
      {"unitary-restriction-defect", check_unitary_restriction},
      {"product-perturbation", check_product_perturbation},
      {"orbit-growth", check_orbit_growth_random},
      {"residual-floor", check_residual_floor},
      {"invariant-gap", check_invariant_gap},
      {"kernel-defect-bound", check_kernel_defect_bound},
      {"steinberg-ratio", check_steinberg},
  };
  std::vector<CheckResult> results;
  for (const NamedCheck& c : checks) {
    CheckResult res;
    res.name = c.name;
    res.trials = trials;
    Rng rng(seed ^ std::hash<std::string>{}(c.name));
    for (int t = 0; t < trials && res.ok; ++t) {
      Failure f;
      try {
        f = c.run(rng);
      } catch (const std::exception& e) {
        f = std::string("unexpected error: ") + e.what();
      }
      if (f) {
        res.ok = false;
        res.detail = "trial " + std::to_string(t) + ": " + *f;
      }
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace gsw
