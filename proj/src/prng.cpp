#include "gsw/prng.hpp"

#include <complex>
#include <numeric>

namespace gsw {

std::vector<int> random_permutation_images(Rng& rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rand_below(rng, i + 1));
    std::swap(img[i], img[j]);
  }
  return img;
}

Eigen::MatrixXcd random_unitary(Rng& rng, int n) {
  Eigen::MatrixXcd g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      g(i, j) = std::complex<double>(rand_normal(rng), rand_normal(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : 1.0;
  }
  return q;
}

}  // namespace gsw
