#include "gsw/metrics.hpp"

#include <cmath>

#include "gsw/errors.hpp"

namespace gsw {

MetricKind parse_metric(const std::string& name) {
  if (name == "hamming") return MetricKind::Hamming;
  if (name == "hs") return MetricKind::HS;
  if (name == "frobenius") return MetricKind::Frobenius;
  if (name == "flex") return MetricKind::Flex;
  if (name == "veryflex") return MetricKind::VeryFlex;
  throw input_error("unknown metric '" + name + "'");
}

std::string metric_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::Hamming: return "hamming";
    case MetricKind::HS: return "hs";
    case MetricKind::Frobenius: return "frobenius";
    case MetricKind::Flex: return "flex";
    case MetricKind::VeryFlex: return "veryflex";
  }
  return "?";
}

double hamming(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw input_error("hamming: degree mismatch");
  const int n = sigma.degree();
  int mismatches = 0;
  for (int x = 0; x < n; ++x) mismatches += sigma(x) != tau(x);
  return static_cast<double>(mismatches) / n;
}

double hs_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("hs_distance: need two n x n matrices");
  return (a - b).norm() / std::sqrt(static_cast<double>(a.rows()));
}

double frobenius(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw input_error("frobenius: shape mismatch");
  return (a - b).norm();
}

Eigen::MatrixXcd embed_permutation(const Permutation& sigma) {
  const int n = sigma.degree();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (int x = 0; x < n; ++x) p(sigma(x), x) = 1.0;
  return p;
}

double flex_distance(const Permutation& sigma, const Permutation& tau, bool very) {
  const int n = sigma.degree();
  const int m = tau.degree();
  if (n > m)
    throw input_error("flex_distance: first argument must have the smaller degree");
  int mismatches = 0;
  for (int x = 0; x < n; ++x) mismatches += sigma(x) != tau(x);
  if (very) return static_cast<double>(mismatches) / n;
  return static_cast<double>(mismatches + (m - n)) / n;
}

}  // namespace gsw
