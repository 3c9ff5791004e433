// prng.hpp -- deterministic randomness helpers. The mt19937_64 engine is
// specified bit-exactly by the standard; the transforms below avoid the
// implementation-defined std distributions so seeded runs replay identically
// everywhere.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace gsw {

using Rng = std::mt19937_64;

// Uniform integer in [0, n). Plain modulo: the bias is irrelevant at these
// sizes and the output stream stays platform-stable.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) { return rng() % n; }

// Uniform double in the open interval (0, 1).
inline double rand_unit(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// Standard normal via Box-Muller (one value per call).
inline double rand_normal(Rng& rng) {
  constexpr double two_pi = 6.283185307179586476925286766559;
  const double u1 = rand_unit(rng);
  const double u2 = rand_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

// Fisher-Yates image list for a uniform element of Sym(n).
std::vector<int> random_permutation_images(Rng& rng, int n);

// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
// of the R diagonal folded back into Q.
Eigen::MatrixXcd random_unitary(Rng& rng, int n);

}  // namespace gsw
