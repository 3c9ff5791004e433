// words.hpp -- freely reduced words over a finite alphabet, generator
// assignments into Sym(n) and U(n), and seeded sampling of normal-closure
// words for defect testing.
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "gsw/errors.hpp"
#include "gsw/perm.hpp"
#include "gsw/prng.hpp"

namespace gsw {

struct Gen {
  int index = 0;
  int sign = 1;  // +1 or -1
  friend bool operator==(const Gen&, const Gen&) = default;
};

// A word stored in freely reduced form. Letters are encoded as signed
// integers sign * (index + 1); construction reduces and validates.
class Word {
 public:
  Word() = default;

  static Word reduce(const std::vector<Gen>& letters, int num_generators);
  static Word from_signed(const std::vector<int>& codes, int num_generators);

  int length() const { return static_cast<int>(code_.size()); }
  bool empty() const { return code_.empty(); }
  Gen letter(int i) const {
    const int c = code_[i];
    return Gen{std::abs(c) - 1, c > 0 ? 1 : -1};
  }
  const std::vector<int>& signed_codes() const { return code_; }
  int max_generator_index() const;  // -1 for the empty word

  Word inverse() const;
  Word concat(const Word& rhs) const;   // reduced product this * rhs
  Word conjugate(const Word& g) const;  // g * this * g^-1, reduced

  // Compact text form: generators a, b, ... with inverses A, B, ...;
  // generator i >= 26 prints as g<i> / G<i>.
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> code_;
};

// Uniformly random freely reduced word of exactly the requested length.
Word random_reduced_word(Rng& rng, int alphabet_size, int length);

// Generator images in Sym(n); all images must share one degree.
class PermGeneratorMap {
 public:
  explicit PermGeneratorMap(std::vector<Permutation> images);
  int degree() const { return images_[0].degree(); }
  int alphabet_size() const { return static_cast<int>(images_.size()); }
  const Permutation& image(int i) const { return images_[i]; }
  const std::vector<Permutation>& images() const { return images_; }
  friend bool operator==(const PermGeneratorMap&, const PermGeneratorMap&) = default;

 private:
  std::vector<Permutation> images_;
};

// Generator images in U(n); every image M must satisfy
// ||M* M - I||_F <= n * 1e-12.
class UnitaryGeneratorMap {
 public:
  explicit UnitaryGeneratorMap(std::vector<Eigen::MatrixXcd> images);
  int dimension() const { return static_cast<int>(images_[0].rows()); }
  int alphabet_size() const { return static_cast<int>(images_.size()); }
  const Eigen::MatrixXcd& image(int i) const { return images_[i]; }
  const std::vector<Eigen::MatrixXcd>& images() const { return images_; }

 private:
  std::vector<Eigen::MatrixXcd> images_;
};

// Word evaluation. The rightmost letter acts first, matching the composition
// convention in perm.hpp; the empty word maps to the identity.
Permutation evaluate(const PermGeneratorMap& f, const Word& w);
Eigen::MatrixXcd evaluate(const UnitaryGeneratorMap& f, const Word& w);

struct KernelWordOptions {
  int max_conjugates = 3;        // words are products of at most this many
                                 // conjugated relators
  int max_conjugator_length = 2; // length budget for each conjugator
  int attempt_factor = 200;      // sampling attempts per requested word
};

// Seeded sampling of words from the normal closure of `relators`: reduced
// products of conjugated relators, deduplicated, each of length <= max_len.
// The relators themselves come first. May return fewer than `count` words
// when the length budget forces it; deterministic for a fixed seed.
std::vector<Word> sample_kernel_words(const std::vector<Word>& relators,
                                      int max_len, int count,
                                      std::uint64_t seed,
                                      const KernelWordOptions& opt = {});

}  // namespace gsw
