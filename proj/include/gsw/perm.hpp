// perm.hpp -- permutations of {0, ..., n-1}. Products compose right to left:
// (s.compose(t))(x) = s(t(x)), so in a product the rightmost factor acts first.
#pragma once

#include <string>
#include <vector>

#include "gsw/errors.hpp"

namespace gsw {

class Permutation {
 public:
  // Validates that `images` is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<char> seen(n, 0);
    for (int x : images_) {
      if (x < 0 || x >= n || seen[x])
        throw input_error("permutation image list is not a bijection of 0.." +
                          std::to_string(n - 1));
      seen[x] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  // this after rhs: x -> (*this)(rhs(x)).
  Permutation compose(const Permutation& rhs) const {
    if (rhs.degree() != degree())
      throw input_error("permutation compose: degree mismatch");
    std::vector<int> img(degree());
    for (int x = 0; x < degree(); ++x) img[x] = images_[rhs.images_[x]];
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<int> img(degree());
    for (int x = 0; x < degree(); ++x) img[images_[x]] = x;
    return Permutation(std::move(img));
  }

  bool is_identity() const {
    for (int x = 0; x < degree(); ++x)
      if (images_[x] != x) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace gsw
