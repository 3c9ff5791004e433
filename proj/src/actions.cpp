#include "gsw/actions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gsw/errors.hpp"

namespace gsw {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Dense orbit ids in order of first appearance.
std::pair<std::vector<int>, int> dense_components(Dsu& dsu, int n) {
  std::vector<int> id(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    const int root = dsu.find(x);
    if (id[root] < 0) id[root] = next++;
    id[x] = id[root];
  }
  return {std::move(id), next};
}

}  // namespace

PermAction::PermAction(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ < 1) throw input_error("action degree must be positive");
  for (const Permutation& g : gens_)
    if (g.degree() != degree_)
      throw input_error("action generator degree " + std::to_string(g.degree()) +
                        " does not match action degree " + std::to_string(degree_));
  Dsu dsu(degree_);
  for (const Permutation& g : gens_)
    for (int x = 0; x < degree_; ++x) dsu.unite(x, g(x));
  auto [ids, count] = dense_components(dsu, degree_);
  orbit_id_ = std::move(ids);
  orbit_count_ = count;
}

std::vector<std::vector<int>> PermAction::orbits() const {
  std::vector<std::vector<int>> out(orbit_count_);
  for (int x = 0; x < degree_; ++x) out[orbit_id_[x]].push_back(x);
  return out;
}

PairOrbitDecomposition pair_orbits(const PermAction& beta, const PermAction& alpha) {
  if (beta.num_generators() != alpha.num_generators())
    throw input_error("pair_orbits: the two actions use different alphabets");
  const int n0 = beta.degree();
  const int n = alpha.degree();
  Dsu dsu(n0 * n);
  for (int s = 0; s < beta.num_generators(); ++s) {
    const Permutation& bs = beta.generator(s);
    const Permutation& as = alpha.generator(s);
    for (int b0 = 0; b0 < n0; ++b0)
      for (int b = 0; b < n; ++b) dsu.unite(b0 * n + b, bs(b0) * n + as(b));
  }
  auto [ids, count] = dense_components(dsu, n0 * n);

  PairOrbitDecomposition d;
  d.b0_size = n0;
  d.b_size = n;
  d.pair_orbit_id = std::move(ids);
  d.orbits.assign(count, PairOrbit{});
  d.b0_orbit_sizes.assign(beta.orbit_count(), 0);
  for (int x = 0; x < n0; ++x) d.b0_orbit_sizes[beta.orbit_ids()[x]]++;
  for (int b0 = 0; b0 < n0; ++b0)
    for (int b = 0; b < n; ++b) {
      PairOrbit& o = d.orbits[d.pair_orbit_id[b0 * n + b]];
      o.size++;
      o.b0_orbit_index = beta.orbit_ids()[b0];
    }
  const int diag = std::min(n0, n);
  for (int x = 0; x < diag; ++x)
    d.orbits[d.pair_orbit_id[x * n + x]].diagonal_count++;
  return d;
}

OrbitGrowthReport check_orbit_growth(const PairOrbitDecomposition& d,
                                     bool alpha_transitive) {
  if (!alpha_transitive)
    throw input_error("check_orbit_growth: requires a transitive second action");
  if (d.b0_size >= d.b_size)
    throw input_error("check_orbit_growth: requires |B0| < |B| (got " +
                      std::to_string(d.b0_size) + " vs " +
                      std::to_string(d.b_size) + ")");
  OrbitGrowthReport report;
  report.margins.reserve(d.orbits.size());
  long long min_margin = 0;
  bool first = true;
  for (const PairOrbit& o : d.orbits) {
    const long long margin = o.size - 2 * d.b0_orbit_sizes[o.b0_orbit_index];
    report.margins.push_back(margin);
    if (first || margin < min_margin) min_margin = margin;
    first = false;
  }
  report.min_margin = min_margin;
  for (size_t i = 0; i < report.margins.size(); ++i)
    if (report.margins[i] < 0)
      throw claim_violation(
          "orbit-growth", "pair orbit " + std::to_string(i) + " has size " +
                              std::to_string(d.orbits[i].size) +
                              " below twice its base orbit size " +
                              std::to_string(d.b0_orbit_sizes[d.orbits[i].b0_orbit_index]));
  return report;
}

PermAction z2_torus_action(int m) {
  if (m < 2) throw input_error("z2_torus_action: need m >= 2");
  const int n = m * m;
  std::vector<int> a(n), b(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      a[i * m + j] = ((i + 1) % m) * m + j;
      b[i * m + j] = i * m + (j + 1) % m;
    }
  return PermAction(n, {Permutation(std::move(a)), Permutation(std::move(b))});
}

PermAction random_transitive_action(Rng& rng, int degree, int extra_generators) {
  if (degree < 1) throw input_error("random_transitive_action: degree must be positive");
  if (extra_generators < 0)
    throw input_error("random_transitive_action: negative generator count");
  std::vector<Permutation> gens;
  const std::vector<int> order = random_permutation_images(rng, degree);
  std::vector<int> cycle(degree);
  for (int i = 0; i < degree; ++i) cycle[order[i]] = order[(i + 1) % degree];
  gens.emplace_back(std::move(cycle));
  for (int i = 0; i < extra_generators; ++i)
    gens.emplace_back(random_permutation_images(rng, degree));
  return PermAction(degree, std::move(gens));
}

}  // namespace gsw
