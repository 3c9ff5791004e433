// actions.hpp -- permutation actions given by generator images, their orbit
// structure, and the diagonal decomposition of a product of two actions into
// pair orbits. The group behind an action is whatever the images generate;
// orbits come from the generator moves alone, which is enough because every
// generator is invertible.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsw/perm.hpp"
#include "gsw/prng.hpp"
#include "gsw/words.hpp"

namespace gsw {

class PermAction {
 public:
  PermAction(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const std::vector<Permutation>& generators() const { return gens_; }
  const Permutation& generator(int i) const { return gens_[i]; }

  // orbit_ids()[x] is a dense orbit index in [0, orbit_count()).
  const std::vector<int>& orbit_ids() const { return orbit_id_; }
  int orbit_count() const { return orbit_count_; }
  bool is_transitive() const { return orbit_count_ == 1; }
  std::vector<std::vector<int>> orbits() const;

  friend bool operator==(const PermAction&, const PermAction&) = default;

 private:
  int degree_;
  std::vector<Permutation> gens_;
  std::vector<int> orbit_id_;
  int orbit_count_ = 0;
};

// One orbit of the diagonal action on B0 x B.
struct PairOrbit {
  long long size = 0;
  long long diagonal_count = 0;  // pairs (x, x) with x < min(|B0|, |B|)
  int b0_orbit_index = 0;        // the beta-orbit the first coordinates fill
};

struct PairOrbitDecomposition {
  int b0_size = 0;
  int b_size = 0;
  std::vector<PairOrbit> orbits;
  std::vector<long long> b0_orbit_sizes;  // sizes of beta's orbits on B0
  std::vector<int> pair_orbit_id;         // index: b0 * b_size + b

  int orbit_of(int b0, int b) const { return pair_orbit_id[b0 * b_size + b]; }
};

// Decomposes B0 x B under s . (b0, b) = (beta_s(b0), alpha_s(b)). Both
// actions must use the same alphabet. Orbit indices are assigned in
// row-major order of first appearance, so the output is deterministic.
PairOrbitDecomposition pair_orbits(const PermAction& beta, const PermAction& alpha);

struct OrbitGrowthReport {
  std::vector<long long> margins;  // |O| - 2 |O_i| per pair orbit
  long long min_margin = 0;
};

// Requires alpha transitive and |B0| < |B|; under those hypotheses every
// pair orbit O lying over the beta-orbit O_i satisfies |O| >= 2 |O_i|.
// A violated inequality throws claim_violation("orbit-growth", ...), which
// must never happen on valid input.
OrbitGrowthReport check_orbit_growth(const PairOrbitDecomposition& d,
                                     bool alpha_transitive);

// The coordinate-shift action of two commuting generators on the m x m
// torus (Z/m)^2; point (i, j) sits at index i * m + j. Transitive, degree m^2.
PermAction z2_torus_action(int m);

// Seeded action of `extra_generators + 1` generators on `degree` points whose
// first generator is a random full cycle, so the action is always transitive.
PermAction random_transitive_action(Rng& rng, int degree, int extra_generators = 1);

}  // namespace gsw
