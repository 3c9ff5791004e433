#include <doctest.h>

#include "gsw/errors.hpp"
#include "gsw/metrics.hpp"
#include "gsw/perm.hpp"
#include "gsw/prng.hpp"

using namespace gsw;

TEST_CASE("hamming counts disagreements") {
  const Permutation id = Permutation::identity(4);
  CHECK(hamming(id, id) == 0.0);
  CHECK(hamming(Permutation({1, 0, 2, 3}), id) == doctest::Approx(0.5));
  CHECK(hamming(Permutation({1, 2, 3, 0}), id) == 1.0);
  CHECK_THROWS_AS(hamming(id, Permutation::identity(5)), input_error);
}

TEST_CASE("hamming is bi-invariant") {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + static_cast<int>(rand_below(rng, 6));
    const Permutation s(random_permutation_images(rng, n));
    const Permutation u(random_permutation_images(rng, n));
    const Permutation g(random_permutation_images(rng, n));
    CHECK(hamming(g.compose(s), g.compose(u)) == doctest::Approx(hamming(s, u)));
    CHECK(hamming(s.compose(g), u.compose(g)) == doctest::Approx(hamming(s, u)));
  }
}

TEST_CASE("hs distance normalizes frobenius by sqrt(n)") {
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(4, 4);
  CHECK(hs_distance(id, id) == 0.0);
  CHECK(hs_distance(id, -id) == doctest::Approx(2.0));  // ||2I||_F / 2 = 4/2
  CHECK(frobenius(id, -id) == doctest::Approx(4.0));
  CHECK_THROWS_AS(hs_distance(id, Eigen::MatrixXcd::Identity(3, 3)), input_error);
}

TEST_CASE("frobenius accepts non-square shapes") {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(3, 2);
  Eigen::MatrixXcd b = a;
  b(2, 1) = 3.0;
  CHECK(frobenius(a, b) == doctest::Approx(3.0));
  CHECK_THROWS_AS(frobenius(a, Eigen::MatrixXcd::Zero(2, 3)), input_error);
}

TEST_CASE("unitary inverses preserve frobenius distance") {
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rand_below(rng, 6));
    const Eigen::MatrixXcd a = random_unitary(rng, n);
    const Eigen::MatrixXcd b = random_unitary(rng, n);
    CHECK(std::abs(frobenius(a.adjoint(), b.adjoint()) - frobenius(a, b)) <
          comparison_tolerance(n));
  }
}

TEST_CASE("permutation embedding is a homomorphism and scales hamming") {
  Rng rng(4);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + static_cast<int>(rand_below(rng, 6));
    const Permutation s(random_permutation_images(rng, n));
    const Permutation u(random_permutation_images(rng, n));
    CHECK((embed_permutation(s.compose(u)) -
           embed_permutation(s) * embed_permutation(u))
              .norm() < 1e-12);
    CHECK(hs_distance(embed_permutation(s), embed_permutation(u)) ==
          doctest::Approx(std::sqrt(2.0 * hamming(s, u))));
  }
  // Column x of the matrix is the basis vector at s(x).
  const Eigen::MatrixXcd m = embed_permutation(Permutation({2, 0, 1}));
  CHECK(m(2, 0).real() == 1.0);
  CHECK(m(0, 1).real() == 1.0);
  CHECK(m(1, 2).real() == 1.0);
  CHECK(m.cwiseAbs().sum() == doctest::Approx(3.0));
}

TEST_CASE("flexible distances") {
  // sigma on 3 points against tau on 5: the two padding points always count
  // for flex and never for veryflex.
  const Permutation sigma = Permutation::identity(3);
  const Permutation tau({1, 2, 3, 4, 0});  // moves every point
  CHECK(flex_distance(sigma, tau, false) == doctest::Approx(5.0 / 3.0));
  CHECK(flex_distance(sigma, tau, true) == doctest::Approx(1.0));

  // Equal degrees degenerate to a hamming count over n.
  const Permutation a({1, 0, 2});
  CHECK(flex_distance(a, Permutation::identity(3), false) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(flex_distance(a, Permutation::identity(3), true) ==
        doctest::Approx(2.0 / 3.0));

  // A perfect extension costs only the padding.
  const Permutation ext({1, 0, 2, 3});
  CHECK(flex_distance(a, ext, false) == doctest::Approx(1.0 / 3.0));
  CHECK(flex_distance(a, ext, true) == 0.0);

  // The smaller-degree argument must come first.
  CHECK_THROWS_AS(flex_distance(ext, a, false), input_error);
}

TEST_CASE("veryflex never exceeds flex") {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rand_below(rng, 4));
    const int m = n + static_cast<int>(rand_below(rng, 4));
    const Permutation s(random_permutation_images(rng, n));
    const Permutation u(random_permutation_images(rng, m));
    CHECK(flex_distance(s, u, true) <= flex_distance(s, u, false) + 1e-15);
  }
}

TEST_CASE("metric names round-trip") {
  for (MetricKind k : {MetricKind::Hamming, MetricKind::HS, MetricKind::Frobenius,
                       MetricKind::Flex, MetricKind::VeryFlex})
    CHECK(parse_metric(metric_name(k)) == k);
  CHECK_THROWS_AS(parse_metric("euclid"), input_error);
}

TEST_CASE("comparison tolerance grows with the dimension") {
  CHECK(comparison_tolerance(1) == doctest::Approx(1e-9 + 1e-12));
  CHECK(comparison_tolerance(1000) > comparison_tolerance(10));
}
