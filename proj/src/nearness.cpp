#include "gsw/nearness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gsw/errors.hpp"

namespace gsw {

namespace {

void require_unitary(const Eigen::MatrixXcd& m, const char* who) {
  if (m.rows() != m.cols()) throw input_error(std::string(who) + ": matrix is not square");
  const auto n = m.rows();
  const double err = (m.adjoint() * m - Eigen::MatrixXcd::Identity(n, n)).norm();
  if (err > 1e-12 * static_cast<double>(n))
    throw input_error(std::string(who) + ": matrix is not unitary (||M*M - I||_F = " +
                      std::to_string(err) + ")");
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

PermRepair repair_permutation(const Permutation& t) {
  const int n = t.degree();
  if (n < 2) throw input_error("repair_permutation: degree must be at least 2");
  const int i0 = t.inverse()(n - 1);
  std::vector<int> img(n - 1);
  for (int i = 0; i < n - 1; ++i) img[i] = (i == i0) ? t(n - 1) : t(i);
  Permutation a0{std::move(img)};

  // ||T0 - A0||_F^2 column by column: column i of T0 is zero when t(i) is the
  // deleted point and the unit vector at t(i) otherwise.
  double r2 = 0;
  int moved = 0;
  for (int i = 0; i < n - 1; ++i) {
    if (t(i) == n - 1)
      r2 += 1.0;
    else if (a0(i) != t(i))
      r2 += 2.0;
    if (a0(i) != t(i)) ++moved;
  }
  PermRepair out{std::move(a0), i0, std::sqrt(r2), std::sqrt(2.0 * moved)};
  return out;
}

UnitaryRepair repair_unitary(const Eigen::MatrixXcd& t) {
  const int n = static_cast<int>(t.rows());
  if (n < 2 || t.cols() != n)
    throw input_error("repair_unitary: need a square matrix of dimension >= 2");
  require_unitary(t, "repair_unitary");

  const Eigen::MatrixXcd t0 = t.topLeftCorner(n - 1, n - 1);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t0, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXcd a0 = svd.matrixU() * svd.matrixV().adjoint();

  UnitaryRepair out;
  out.bottom_row = t.row(n - 1).head(n - 1);
  const double u2 = out.bottom_row.squaredNorm();
  out.predicted_defect = std::abs(std::sqrt(std::max(0.0, 1.0 - u2)) - 1.0);
  out.restriction_defect = (t0 - a0).norm();

  Eigen::MatrixXcd fa0(n, n - 1);
  fa0.topRows(n - 1) = a0;
  fa0.row(n - 1).setZero();
  Eigen::MatrixXcd diff = t.adjoint() * fa0;
  diff.topRows(n - 1) -= Eigen::MatrixXcd::Identity(n - 1, n - 1);
  out.inclusion_defect = diff.norm();
  out.a0 = std::move(a0);
  return out;
}

PerturbationReport perturbation_bound_check(const std::vector<Eigen::MatrixXcd>& u,
                                            const std::vector<Eigen::MatrixXcd>& e,
                                            double c) {
  if (u.empty() || u.size() != e.size())
    throw input_error("perturbation_bound_check: need matching nonempty factor lists");
  if (c < 0) throw input_error("perturbation_bound_check: negative budget");
  const auto n = u[0].rows();
  for (size_t i = 0; i < u.size(); ++i) {
    require_unitary(u[i], "perturbation_bound_check");
    if (u[i].rows() != n || e[i].rows() != n || e[i].cols() != n)
      throw input_error("perturbation_bound_check: dimension mismatch");
    if (e[i].norm() > c + 1e-12)
      throw input_error("perturbation_bound_check: perturbation " + std::to_string(i) +
                        " exceeds the budget c");
  }
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(n, n);
  for (size_t i = 0; i < u.size(); ++i) {
    p = p * (u[i] + e[i]);
    q = q * u[i];
  }
  PerturbationReport r;
  r.lhs = (p - q).norm();
  r.bound = std::pow(c + 1.0, static_cast<double>(u.size()));
  r.ratio = r.lhs / r.bound;
  r.holds = r.lhs <= r.bound + 1e-9;
  return r;
}

PermIntertwinerProjection project_to_intertwiner_permutation(
    const Eigen::MatrixXd& f, const PairOrbitDecomposition& d) {
  if (f.rows() != d.b_size || f.cols() != d.b0_size)
    throw input_error("project_to_intertwiner_permutation: f must be |B| x |B0|");
  const int orbit_count = static_cast<int>(d.orbits.size());
  std::vector<double> sum(orbit_count, 0.0);
  for (int b0 = 0; b0 < d.b0_size; ++b0)
    for (int b = 0; b < d.b_size; ++b) sum[d.orbit_of(b0, b)] += f(b, b0);

  PermIntertwinerProjection out;
  out.orbit_coefficients.resize(orbit_count);
  for (int k = 0; k < orbit_count; ++k)
    out.orbit_coefficients[k] = sum[k] / static_cast<double>(d.orbits[k].size);

  out.h.resize(d.b_size, d.b0_size);
  for (int b0 = 0; b0 < d.b0_size; ++b0)
    for (int b = 0; b < d.b_size; ++b)
      out.h(b, b0) = out.orbit_coefficients[d.orbit_of(b0, b)];
  out.residual = (f - out.h).norm();

  bool inclusion_pattern = d.b0_size <= d.b_size;
  for (int b0 = 0; inclusion_pattern && b0 < d.b0_size; ++b0)
    for (int b = 0; b < d.b_size; ++b)
      if (f(b, b0) != (b == b0 ? 1.0 : 0.0)) {
        inclusion_pattern = false;
        break;
      }
  if (inclusion_pattern) {
    double closed = d.b0_size;
    for (const PairOrbit& o : d.orbits)
      closed -= static_cast<double>(o.diagonal_count) * o.diagonal_count / o.size;
    out.closed_form_residual_sq = closed;
  }
  return out;
}

UnitaryIntertwinerProjection project_to_intertwiner_unitary(
    const Eigen::MatrixXcd& f, const std::vector<Eigen::MatrixXcd>& alpha,
    const std::vector<Eigen::MatrixXcd>& beta,
    const std::vector<std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>>* group_pairs) {
  if (alpha.empty() || alpha.size() != beta.size())
    throw input_error("project_to_intertwiner_unitary: generator lists must match");
  const auto d2 = f.rows();
  const auto d1 = f.cols();
  for (const auto& m : alpha) {
    require_unitary(m, "project_to_intertwiner_unitary(alpha)");
    if (m.rows() != d2) throw input_error("project_to_intertwiner_unitary: alpha dimension mismatch");
  }
  for (const auto& m : beta) {
    require_unitary(m, "project_to_intertwiner_unitary(beta)");
    if (m.rows() != d1) throw input_error("project_to_intertwiner_unitary: beta dimension mismatch");
  }

  // Stack vec(alpha(s) h - h beta(s)) = (I ka alpha(s) - beta(s)^T ka I) vec(h)
  // over the generators; intertwiners are the nullspace.
  const auto dim = d2 * d1;
  const auto s_count = static_cast<Eigen::Index>(alpha.size());
  Eigen::MatrixXcd m(s_count * dim, dim);
  const Eigen::MatrixXcd i1 = Eigen::MatrixXcd::Identity(d1, d1);
  const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(d2, d2);
  for (Eigen::Index s = 0; s < s_count; ++s)
    m.middleRows(s * dim, dim) = kron(i1, alpha[s]) - kron(beta[s].transpose(), i2);

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double tol = 1e-8 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);

  const Eigen::Map<const Eigen::VectorXcd> vecf(f.data(), dim);
  Eigen::VectorXcd row_part = Eigen::VectorXcd::Zero(dim);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) <= tol) continue;
    ++rank;
    const auto v = svd.matrixV().col(i);
    row_part += v * (v.adjoint() * vecf);
  }

  UnitaryIntertwinerProjection out;
  out.intertwiner_dimension = static_cast<int>(dim) - rank;
  Eigen::VectorXcd vech = vecf - row_part;
  out.h = Eigen::Map<const Eigen::MatrixXcd>(vech.data(), d2, d1);
  out.residual = (f - out.h).norm();

  if (group_pairs != nullptr) {
    if (group_pairs->empty())
      throw input_error("project_to_intertwiner_unitary: empty group element list");
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(d2, d1);
    for (const auto& [ag, bg] : *group_pairs) {
      if (ag.rows() != d2 || bg.rows() != d1)
        throw input_error("project_to_intertwiner_unitary: group pair dimension mismatch");
      avg += ag * f * bg.adjoint();
    }
    avg /= static_cast<double>(group_pairs->size());
    out.group_average_agreement = (avg - out.h).norm();
  }
  return out;
}

KazhdanEstimate kazhdan_lower_bound(const std::vector<Eigen::MatrixXcd>& rho) {
  if (rho.empty()) throw input_error("kazhdan_lower_bound: empty generator list");
  const auto n = rho[0].rows();
  Eigen::MatrixXcd delta = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& r : rho) {
    require_unitary(r, "kazhdan_lower_bound");
    if (r.rows() != n) throw input_error("kazhdan_lower_bound: dimension mismatch");
    delta += 2.0 * Eigen::MatrixXcd::Identity(n, n) - r - r.adjoint();
  }
  delta = 0.5 * (delta + delta.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(delta);
  if (es.info() != Eigen::Success)
    throw input_error("kazhdan_lower_bound: eigensolver failed");
  const Eigen::VectorXd ev = es.eigenvalues();  // ascending
  const double tol = 1e-9 * std::max(1.0, ev(n - 1));

  KazhdanEstimate out;
  while (out.invariant_dimension < n && ev(out.invariant_dimension) <= tol)
    ++out.invariant_dimension;
  if (out.invariant_dimension == n) {
    out.infinite = true;
    out.lambda1 = std::numeric_limits<double>::infinity();
    out.kappa_hat = std::numeric_limits<double>::infinity();
    return out;
  }
  out.lambda1 = std::max(0.0, ev(out.invariant_dimension));
  out.kappa_hat = std::sqrt(out.lambda1 / static_cast<double>(rho.size()));
  return out;
}

namespace {

double generator_distance(const Permutation& fs, const Permutation& gs,
                          MetricKind metric) {
  switch (metric) {
    case MetricKind::Hamming: return hamming(fs, gs);
    case MetricKind::HS:
      return hs_distance(embed_permutation(fs), embed_permutation(gs));
    case MetricKind::Frobenius:
      return frobenius(embed_permutation(fs), embed_permutation(gs));
    case MetricKind::Flex: return flex_distance(fs, gs, false);
    case MetricKind::VeryFlex: return flex_distance(fs, gs, true);
  }
  return 0;
}

bool word_is_identity_on(const Word& w, const std::vector<const Permutation*>& imgs,
                         int degree) {
  Permutation acc = Permutation::identity(degree);
  for (int i = 0; i < w.length(); ++i) {
    const Gen g = w.letter(i);
    const Permutation& m = *imgs[g.index];
    acc = acc.compose(g.sign > 0 ? m : m.inverse());
  }
  return acc.is_identity();
}

std::vector<Permutation> all_permutations(int t) {
  std::vector<int> img(t);
  for (int i = 0; i < t; ++i) img[i] = i;
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

double factorial(int t) {
  double r = 1;
  for (int i = 2; i <= t; ++i) r *= i;
  return r;
}

struct BruteSearch {
  const PermGeneratorMap* f = nullptr;
  const std::vector<Word>* relators = nullptr;
  MetricKind metric = MetricKind::Hamming;
  std::vector<Permutation> pool;
  std::vector<std::vector<int>> relator_slots;
  std::vector<const Permutation*> chosen;
  int degree = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<Permutation> best_images;
  int best_degree = -1;

  void run(int slot, double acc) {
    const int k = f->alphabet_size();
    if (slot == k) {
      best = acc;
      best_images.clear();
      for (const Permutation* p : chosen) best_images.push_back(*p);
      best_degree = degree;
      return;
    }
    for (const Permutation& cand : pool) {
      const double dd = generator_distance(f->image(slot), cand, metric);
      if (acc + dd >= best) continue;
      chosen[slot] = &cand;
      bool ok = true;
      for (int ri : relator_slots[slot])
        if (!word_is_identity_on((*relators)[ri], chosen, degree)) {
          ok = false;
          break;
        }
      if (ok) run(slot + 1, acc + dd);
    }
  }
};

}  // namespace

NearestHomomorphism nearest_homomorphism_bruteforce(const PermGeneratorMap& f,
                                                    const std::vector<Word>& relators,
                                                    MetricKind metric,
                                                    int max_target_degree) {
  const int n = f.degree();
  const int k = f.alphabet_size();
  const bool flexible = metric == MetricKind::Flex || metric == MetricKind::VeryFlex;
  const int tmax = flexible ? max_target_degree : n;
  if (flexible && tmax < n)
    throw input_error("nearest_homomorphism_bruteforce: max_target_degree below the source degree");
  for (const Word& r : relators)
    if (r.max_generator_index() >= k)
      throw input_error("nearest_homomorphism_bruteforce: relator uses an unknown generator");

  if (n > 8 || tmax > 8)
    throw budget_error("nearest_homomorphism_bruteforce: exhaustive regime is degree <= 8");
  double candidates = 0;
  for (int t = n; t <= tmax; ++t) candidates += std::pow(factorial(t), k);
  if (candidates > factorial(8) * factorial(8) + 0.5)
    throw budget_error("nearest_homomorphism_bruteforce: candidate count " +
                       std::to_string(candidates) + " exceeds the 8!^2 budget");

  BruteSearch search;
  search.f = &f;
  search.relators = &relators;
  search.metric = metric;
  search.chosen.assign(k, nullptr);
  search.relator_slots.assign(k, {});
  for (size_t i = 0; i < relators.size(); ++i) {
    const int mi = relators[i].max_generator_index();
    if (mi >= 0) search.relator_slots[mi].push_back(static_cast<int>(i));
  }
  for (int t = n; t <= tmax; ++t) {
    search.degree = t;
    search.pool = all_permutations(t);
    search.run(0, 0.0);
  }
  // The all-identity tuple kills every relator, so a best tuple always exists.
  return NearestHomomorphism{PermGeneratorMap(std::move(search.best_images)),
                             search.best, search.best_degree};
}

}  // namespace gsw
