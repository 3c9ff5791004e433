// nearness.hpp -- quantitative nearness machinery: repairing an operator
// after deleting the last basis direction, stability of long products under
// perturbation, orthogonal projection onto intertwiners, a spectral-gap
// lower bound for almost-invariant vectors, and an exhaustive
// nearest-homomorphism search on small degrees.
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "gsw/actions.hpp"
#include "gsw/metrics.hpp"
#include "gsw/perm.hpp"
#include "gsw/words.hpp"

namespace gsw {

// Repair of a permutation T of n points after deleting point n-1: the unique
// patch A0 of T's restriction that stays a permutation of the first n-1
// points. removed_preimage is i0 = T^-1(n-1); A0 agrees with T away from i0
// and sends i0 to T(n-1). Always ||T0 - A0||_F <= 1 (0 iff T fixes n-1) and
// the conjugated inclusion defect ||T^-1 . f . A0 - f||_F is at most 2.
struct PermRepair {
  Permutation a0;
  int removed_preimage = 0;   // i0
  double restriction_defect = 0;  // ||T0 - A0||_F, T0 = T with last row/col cut
  double inclusion_defect = 0;    // ||T^-1 . f . A0 - f||_F, f the inclusion
};
PermRepair repair_permutation(const Permutation& t);

// Unitary version: A0 is the unitary polar factor of the top-left
// (n-1) x (n-1) corner T0 of T, with zero singular directions completed
// through the SVD factors. With u = the first n-1 entries of T's bottom row,
// ||T0 - A0||_F equals |sqrt(1 - ||u||^2) - 1| exactly.
struct UnitaryRepair {
  Eigen::MatrixXcd a0;
  Eigen::RowVectorXcd bottom_row;  // u
  double restriction_defect = 0;   // ||T0 - A0||_F
  double predicted_defect = 0;     // |sqrt(1 - ||u||^2) - 1|
  double inclusion_defect = 0;     // ||T* . f . A0 - f||_F
};
UnitaryRepair repair_unitary(const Eigen::MatrixXcd& t);

// ||(U_1 + E_1)...(U_l + E_l) - U_1...U_l||_F <= (c + 1)^l whenever each
// ||E_i||_F <= c and the U_i are unitary. Factors multiply left to right.
struct PerturbationReport {
  double lhs = 0;
  double bound = 0;
  double ratio = 0;
  bool holds = false;
};
PerturbationReport perturbation_bound_check(const std::vector<Eigen::MatrixXcd>& u,
                                            const std::vector<Eigen::MatrixXcd>& e,
                                            double c);

// Projection of f (a |B| x |B0| real matrix) onto the maps commuting with a
// pair of permutation actions, i.e. onto the span of pair-orbit indicators:
// the projection averages f over each pair orbit. When f is the 0/1
// inclusion pattern the residual satisfies
//   ||f - h||_F^2 = |B0| - sum_O c(O)^2 / |O|,
// which is reported in closed_form_residual_sq.
struct PermIntertwinerProjection {
  Eigen::MatrixXd h;
  double residual = 0;
  std::vector<double> orbit_coefficients;
  std::optional<double> closed_form_residual_sq;
};
PermIntertwinerProjection project_to_intertwiner_permutation(
    const Eigen::MatrixXd& f, const PairOrbitDecomposition& d);

// Projection of f : H1 -> H2 (a d2 x d1 matrix) onto
// {h : alpha(s) h = h beta(s) for all s}, computed from the nullspace of the
// stacked commutation system. When the full list of group image pairs
// (alpha(g), beta(g)) is supplied, the group average
// (1/|G|) sum_g alpha(g) f beta(g)^-1 is evaluated as a cross-check and the
// distance between the two answers is reported.
struct UnitaryIntertwinerProjection {
  Eigen::MatrixXcd h;
  double residual = 0;
  int intertwiner_dimension = 0;
  std::optional<double> group_average_agreement;
};
UnitaryIntertwinerProjection project_to_intertwiner_unitary(
    const Eigen::MatrixXcd& f, const std::vector<Eigen::MatrixXcd>& alpha,
    const std::vector<Eigen::MatrixXcd>& beta,
    const std::vector<std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>>*
        group_pairs = nullptr);

// kappa_hat = sqrt(lambda_1 / |S|), with lambda_1 the smallest eigenvalue of
// Delta = sum_s (2 I - rho(s) - rho(s)*) on the orthogonal complement of the
// invariant vectors (= ker Delta). Every unit vector v orthogonal to the
// invariants then satisfies max_s ||rho(s) v - v|| >= kappa_hat. When the
// complement is empty the bound is vacuous and `infinite` is set.
struct KazhdanEstimate {
  double kappa_hat = 0;
  double lambda1 = 0;
  int invariant_dimension = 0;
  bool infinite = false;
};
KazhdanEstimate kazhdan_lower_bound(const std::vector<Eigen::MatrixXcd>& rho);

// Exhaustive nearest relator-exact map. For Hamming/HS/Frobenius the target
// degree equals f's; for flex and veryflex every degree in
// [n, max_target_degree] is scanned. Degrees above 8 (or candidate counts
// beyond 8!^2 tuples) raise budget_error; ties resolve to the first hit in
// (degree, lexicographic image) order.
struct NearestHomomorphism {
  PermGeneratorMap best;
  double distance = 0;
  int target_degree = 0;
};
NearestHomomorphism nearest_homomorphism_bruteforce(const PermGeneratorMap& f,
                                                    const std::vector<Word>& relators,
                                                    MetricKind metric,
                                                    int max_target_degree);

}  // namespace gsw
