// metrics.hpp -- distances between permutations and matrices: normalized
// Hamming, normalized Hilbert-Schmidt, plain Frobenius, and the flexible
// variants that compare permutations of different degrees.
#pragma once

#include <Eigen/Dense>
#include <string>

#include "gsw/perm.hpp"

namespace gsw {

enum class MetricKind { Hamming, HS, Frobenius, Flex, VeryFlex };

MetricKind parse_metric(const std::string& name);  // input_error on unknown
std::string metric_name(MetricKind kind);

// Real comparisons elsewhere use an absolute tolerance with a small
// dimension-scaled slack on top.
inline double comparison_tolerance(int n) { return 1e-9 + 1e-12 * n; }

// (1/n) #{x : sigma(x) != tau(x)}; degrees must match.
double hamming(const Permutation& sigma, const Permutation& tau);

// ||A - B||_F / sqrt(n) for n x n matrices.
double hs_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// ||A - B||_F; any shared shape, square or not.
double frobenius(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// 0/1 matrix P with P(sigma(x), x) = 1, so P e_x = e_{sigma(x)} and
// embed(s.compose(t)) = embed(s) * embed(t).
Eigen::MatrixXcd embed_permutation(const Permutation& sigma);

// Flexible distance for sigma in Sym(n), tau in Sym(m) with n <= m:
//   flex      = (mismatches on the first n points + (m - n)) / n
//   veryflex  = mismatches on the first n points / n.
// An image tau(x) >= n always counts as a mismatch, which the first-n-points
// comparison gives for free.
double flex_distance(const Permutation& sigma, const Permutation& tau, bool very);

}  // namespace gsw
