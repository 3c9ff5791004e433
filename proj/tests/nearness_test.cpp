#include <doctest.h>

#include <cmath>

#include "gsw/errors.hpp"
#include "gsw/metrics.hpp"
#include "gsw/nearness.hpp"
#include "support/oracles.hpp"

using namespace gsw;

namespace {

Eigen::MatrixXd inclusion(int b, int b0) {
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(b, b0);
  for (int x = 0; x < b0; ++x) f(x, x) = 1.0;
  return f;
}

PermAction patched(const PermAction& alpha) {
  std::vector<Permutation> imgs;
  for (const Permutation& g : alpha.generators())
    imgs.push_back(repair_permutation(g).a0);
  return PermAction(alpha.degree() - 1, std::move(imgs));
}

}  // namespace

TEST_CASE("permutation repair patches the deleted point") {
  // t sends 0 -> 3, so the patch reroutes 0 to t(3) = 1.
  const PermRepair r = repair_permutation(Permutation({3, 0, 2, 1}));
  CHECK(r.a0.images() == std::vector<int>{1, 0, 2});
  CHECK(r.removed_preimage == 0);
  CHECK(r.restriction_defect == 1.0);
  CHECK(r.inclusion_defect == doctest::Approx(std::sqrt(2.0)));

  // A permutation fixing the last point restricts exactly.
  const PermRepair fix = repair_permutation(Permutation({2, 0, 1, 3}));
  CHECK(fix.a0.images() == std::vector<int>{2, 0, 1});
  CHECK(fix.restriction_defect == 0.0);
  CHECK(fix.inclusion_defect == 0.0);

  CHECK_THROWS_AS(repair_permutation(Permutation({0})), input_error);
}

TEST_CASE("permutation repair bounds hold exhaustively through degree 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& images : oracles::all_image_lists(n)) {
      const Permutation t(images);
      const PermRepair r = repair_permutation(t);
      CHECK((r.restriction_defect == 0.0 || r.restriction_defect == 1.0));
      CHECK(r.inclusion_defect <= 2.0 + 1e-12);
      CHECK((r.restriction_defect == 0.0) == (t(n - 1) == n - 1));
      // The patch really is t with one value rerouted.
      int diffs = 0;
      for (int x = 0; x < n - 1; ++x) diffs += r.a0(x) != t(x);
      CHECK(diffs <= 1);
    }
  }
}

TEST_CASE("unitary repair defect matches its closed form") {
  Rng rng(6);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rand_below(rng, 7));
    const UnitaryRepair r = repair_unitary(random_unitary(rng, n));
    CHECK(r.restriction_defect == doctest::Approx(r.predicted_defect).epsilon(1e-8));
    CHECK(r.restriction_defect <= 1.0 + 1e-9);
    CHECK(r.inclusion_defect <= 2.0 + 1e-9);
    const int m = n - 1;
    CHECK((r.a0.adjoint() * r.a0 - Eigen::MatrixXcd::Identity(m, m)).norm() <
          comparison_tolerance(m));
  }
}

TEST_CASE("unitary repair of an embedded permutation matches the combinatorial one") {
  Rng rng(16);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rand_below(rng, 6));
    const Permutation p(random_permutation_images(rng, n));
    const PermRepair pr = repair_permutation(p);
    const UnitaryRepair ur = repair_unitary(embed_permutation(p));
    CHECK(ur.restriction_defect == doctest::Approx(pr.restriction_defect).epsilon(1e-9));
    // The polar factor is again a permutation matrix, up to phase freedom in
    // the fully deleted direction; its distance to the embedded patch is 0
    // whenever the defect is 0.
    if (pr.restriction_defect == 0.0)
      CHECK((ur.a0 - embed_permutation(pr.a0)).norm() < 1e-9);
  }
  CHECK_THROWS_AS(repair_unitary(Eigen::MatrixXcd::Identity(1, 1)), input_error);
  CHECK_THROWS_AS(repair_unitary(2.0 * Eigen::MatrixXcd::Identity(3, 3)),
                  input_error);
}

TEST_CASE("product perturbation bound") {
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rand_below(rng, 5));
    const int l = 1 + static_cast<int>(rand_below(rng, 5));
    const double c = 0.2 + 1.5 * rand_unit(rng);
    std::vector<Eigen::MatrixXcd> u, e;
    for (int i = 0; i < l; ++i) {
      u.push_back(random_unitary(rng, n));
      Eigen::MatrixXcd noise(n, n);
      for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col)
          noise(r, col) = std::complex<double>(rand_normal(rng), rand_normal(rng));
      noise *= c * rand_unit(rng) / noise.norm();
      e.push_back(noise);
    }
    const PerturbationReport rep = perturbation_bound_check(u, e, c);
    CHECK(rep.holds);
    CHECK(rep.bound == doctest::Approx(std::pow(c + 1.0, l)));
    CHECK(rep.ratio <= 1.0 + 1e-12);
  }
  // Oversized perturbations are rejected up front.
  std::vector<Eigen::MatrixXcd> u = {Eigen::MatrixXcd::Identity(2, 2)};
  std::vector<Eigen::MatrixXcd> e = {Eigen::MatrixXcd::Identity(2, 2)};
  CHECK_THROWS_AS(perturbation_bound_check(u, e, 0.5), input_error);
}

TEST_CASE("pair-orbit projection averages over orbits") {
  // Swap against rotation: one orbit of 6 pairs, so the projection of the
  // inclusion pattern is the constant matrix 1/3 and the residual squared is
  // 2 - (2^2)/6 = 4/3.
  const PermAction beta(2, {Permutation({1, 0})});
  const PermAction alpha(3, {Permutation({1, 2, 0})});
  const auto proj =
      project_to_intertwiner_permutation(inclusion(3, 2), pair_orbits(beta, alpha));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(proj.h(i, j) == doctest::Approx(1.0 / 3.0));
  CHECK(proj.residual * proj.residual == doctest::Approx(4.0 / 3.0));
  REQUIRE(proj.closed_form_residual_sq.has_value());
  CHECK(*proj.closed_form_residual_sq == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("projection fixes invariant matrices and is idempotent") {
  Rng rng(25);
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + static_cast<int>(rand_below(rng, 6));
    const PermAction alpha = random_transitive_action(rng, n, 1);
    const PermAction beta = patched(alpha);
    const auto d = pair_orbits(beta, alpha);
    Eigen::MatrixXd f(n, n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n - 1; ++j) f(i, j) = rand_normal(rng);
    const auto proj = project_to_intertwiner_permutation(f, d);
    const auto twice = project_to_intertwiner_permutation(proj.h, d);
    CHECK((twice.h - proj.h).norm() < 1e-9);
    CHECK(twice.residual < 1e-9);
    // The projection commutes with the actions.
    for (int s = 0; s < alpha.num_generators(); ++s) {
      Eigen::MatrixXd moved(n, n - 1);
      for (int j = 0; j < n - 1; ++j)
        for (int i = 0; i < n; ++i)
          moved(alpha.generator(s)(i), beta.generator(s)(j)) = proj.h(i, j);
      CHECK((moved - proj.h).norm() < 1e-9);
    }
    // Pythagoras: ||f||^2 = ||h||^2 + residual^2.
    CHECK(f.squaredNorm() ==
          doctest::Approx(proj.h.squaredNorm() + proj.residual * proj.residual));
  }
}

TEST_CASE("residual floor for patched restrictions of transitive actions") {
  Rng rng(33);
  for (int t = 0; t < 40; ++t) {
    const int n = 3 + static_cast<int>(rand_below(rng, 12));
    const int extra = static_cast<int>(rand_below(rng, 3));
    const PermAction alpha = random_transitive_action(rng, n, extra);
    const auto proj = project_to_intertwiner_permutation(
        inclusion(n, n - 1), pair_orbits(patched(alpha), alpha));
    REQUIRE(proj.closed_form_residual_sq.has_value());
    CHECK(proj.residual * proj.residual ==
          doctest::Approx(*proj.closed_form_residual_sq).epsilon(1e-12));
    CHECK(proj.residual >= std::sqrt((n - 1) / 2.0) - 1e-9);
  }
}

TEST_CASE("unitary projection agrees with the combinatorial one") {
  Rng rng(52);
  for (int t = 0; t < 25; ++t) {
    const int n = 3 + static_cast<int>(rand_below(rng, 4));
    const PermAction alpha = random_transitive_action(rng, n, 1);
    const PermAction beta = patched(alpha);
    Eigen::MatrixXd f(n, n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n - 1; ++j) f(i, j) = rand_normal(rng);

    const auto perm_proj =
        project_to_intertwiner_permutation(f, pair_orbits(beta, alpha));
    std::vector<Eigen::MatrixXcd> am, bm;
    for (int s = 0; s < alpha.num_generators(); ++s) {
      am.push_back(embed_permutation(alpha.generator(s)));
      bm.push_back(embed_permutation(beta.generator(s)));
    }
    const auto unit_proj = project_to_intertwiner_unitary(f.cast<std::complex<double>>(), am, bm);
    CHECK((unit_proj.h - perm_proj.h.cast<std::complex<double>>()).norm() < 1e-8);
    CHECK(unit_proj.residual == doctest::Approx(perm_proj.residual).epsilon(1e-8));
  }
}

TEST_CASE("unitary projection group average cross-check") {
  // Cyclic group of order 3 acting by rotation on both sides; supply the full
  // group and compare the nullspace projection with plain averaging.
  const Permutation c({1, 2, 0});
  std::vector<Eigen::MatrixXcd> alpha = {embed_permutation(c)};
  std::vector<Eigen::MatrixXcd> beta = {embed_permutation(c)};
  std::vector<std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>> pairs;
  Permutation g = Permutation::identity(3);
  for (int k = 0; k < 3; ++k) {
    pairs.push_back({embed_permutation(g), embed_permutation(g)});
    g = c.compose(g);
  }
  Rng rng(61);
  Eigen::MatrixXcd f(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) f(i, j) = rand_normal(rng);
  const auto proj = project_to_intertwiner_unitary(f, alpha, beta, &pairs);
  REQUIRE(proj.group_average_agreement.has_value());
  CHECK(*proj.group_average_agreement < 1e-9);
  // Intertwiners of the regular rotation with itself are the circulants.
  CHECK(proj.intertwiner_dimension == 3);
}

TEST_CASE("spectral gap estimates on small cyclic representations") {
  // Sym(2) regular representation: Delta = 2I - 2P has eigenvalues 0 and 4.
  const KazhdanEstimate swap =
      kazhdan_lower_bound({embed_permutation(Permutation({1, 0}))});
  CHECK_FALSE(swap.infinite);
  CHECK(swap.lambda1 == doctest::Approx(4.0));
  CHECK(swap.kappa_hat == doctest::Approx(2.0));
  CHECK(swap.invariant_dimension == 1);

  // Rotation on three points: 2 - 2cos(2 pi / 3) = 3.
  const KazhdanEstimate rot =
      kazhdan_lower_bound({embed_permutation(Permutation({1, 2, 0}))});
  CHECK(rot.lambda1 == doctest::Approx(3.0));
  CHECK(rot.kappa_hat == doctest::Approx(std::sqrt(3.0)));

  // The identity representation has no orthogonal complement at all.
  const KazhdanEstimate triv =
      kazhdan_lower_bound({Eigen::MatrixXcd::Identity(2, 2)});
  CHECK(triv.infinite);
  CHECK(triv.invariant_dimension == 2);
}

TEST_CASE("almost invariant vectors are near the invariant subspace") {
  // For any v orthogonal to the invariants, some generator moves it by at
  // least kappa_hat * ||v||; checked on random permutation representations.
  Rng rng(71);
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + static_cast<int>(rand_below(rng, 5));
    std::vector<Eigen::MatrixXcd> rho;
    for (int s = 0; s < 2; ++s)
      rho.push_back(embed_permutation(Permutation(random_permutation_images(rng, n))));
    const KazhdanEstimate kz = kazhdan_lower_bound(rho);
    if (kz.infinite || kz.kappa_hat == 0.0) continue;
    // Random vector, projected off the invariants by averaging over orbits of
    // the action (columns of the permutation matrices span coordinates).
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = rand_normal(rng);
    // Remove invariant component: subtract orbit means of the permutation
    // action generated by the two permutations.
    std::vector<Permutation> gens;
    for (const auto& m : rho) {
      std::vector<int> img(n);
      for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row)
          if (std::abs(m(row, col) - 1.0) < 1e-12) img[col] = row;
      gens.emplace_back(img);
    }
    const PermAction act(n, gens);
    for (const auto& orbit : act.orbits()) {
      std::complex<double> mean = 0;
      for (int x : orbit) mean += v(x);
      mean /= static_cast<double>(orbit.size());
      for (int x : orbit) v(x) -= mean;
    }
    if (v.norm() < 1e-12) continue;
    double moved = 0;
    for (const auto& m : rho) moved = std::max(moved, (m * v - v).norm());
    CHECK(moved >= kz.kappa_hat * v.norm() - 1e-9);
  }
}

TEST_CASE("exhaustive nearest relator-exact map on one generator") {
  // Nearest involution to a 3-cycle: any transposition, at hamming 2/3; ties
  // resolve to the lexicographically first image list.
  const PermGeneratorMap f({Permutation({1, 2, 0})});
  const std::vector<Word> relators = {Word::from_signed({1, 1}, 1)};
  const NearestHomomorphism nh =
      nearest_homomorphism_bruteforce(f, relators, MetricKind::Hamming, 3);
  CHECK(nh.distance == doctest::Approx(2.0 / 3.0));
  CHECK(nh.target_degree == 3);
  CHECK(nh.best.image(0).images() == std::vector<int>{0, 2, 1});
}

TEST_CASE("nearest commuting pair to a non-commuting pair") {
  const PermGeneratorMap f({Permutation({1, 2, 0}), Permutation({1, 0, 2})});
  const std::vector<Word> relators = {Word::from_signed({1, 2, -1, -2}, 2)};
  const NearestHomomorphism nh =
      nearest_homomorphism_bruteforce(f, relators, MetricKind::Hamming, 3);
  CHECK(nh.distance == doctest::Approx(2.0 / 3.0));
  // First optimum in scan order keeps the transposition and repairs the
  // rotation to the same transposition.
  CHECK(nh.best.image(0).images() == std::vector<int>{1, 0, 2});
  CHECK(nh.best.image(1).images() == std::vector<int>{1, 0, 2});
}

TEST_CASE("exhaustive search agrees with a naive re-enumeration") {
  Rng rng(82);
  const std::vector<std::vector<int>> relator_codes = {{1, 2, -1, -2}};
  std::vector<Word> relators = {Word::from_signed(relator_codes[0], 2)};
  for (int t = 0; t < 6; ++t) {
    const int n = 3 + static_cast<int>(rand_below(rng, 2));
    std::vector<std::vector<int>> images = {random_permutation_images(rng, n),
                                            random_permutation_images(rng, n)};
    const PermGeneratorMap f({Permutation(images[0]), Permutation(images[1])});
    const NearestHomomorphism nh =
        nearest_homomorphism_bruteforce(f, relators, MetricKind::Hamming, n);
    const auto naive = oracles::naive_nearest_hamming(images, relator_codes);
    CHECK(nh.distance == doctest::Approx(naive.distance).epsilon(1e-12));
  }
}

TEST_CASE("search budget keeps the exhaustive oracle honest") {
  std::vector<int> big(9);
  for (int i = 0; i < 9; ++i) big[i] = (i + 1) % 9;
  const PermGeneratorMap f({Permutation(big)});
  CHECK_THROWS_AS(nearest_homomorphism_bruteforce(
                      f, {Word::from_signed({1, 1}, 1)}, MetricKind::Hamming, 9),
                  budget_error);
}

TEST_CASE("flexible search may enlarge the degree") {
  // A 4-cycle has no relator-exact involution neighbors closer than 1/2 at
  // degree 4, but allowing degree 5 cannot hurt under flex accounting.
  const PermGeneratorMap f({Permutation({1, 2, 3, 0})});
  const std::vector<Word> relators = {Word::from_signed({1, 1}, 1)};
  const NearestHomomorphism flex =
      nearest_homomorphism_bruteforce(f, relators, MetricKind::Flex, 6);
  const NearestHomomorphism ham =
      nearest_homomorphism_bruteforce(f, relators, MetricKind::Hamming, 4);
  const NearestHomomorphism vflex =
      nearest_homomorphism_bruteforce(f, relators, MetricKind::VeryFlex, 6);
  CHECK(vflex.distance <= flex.distance + 1e-12);
  CHECK(flex.distance <= ham.distance + 1e-12);
}
