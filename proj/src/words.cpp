#include "gsw/words.hpp"

#include <algorithm>
#include <set>

namespace gsw {

Word Word::from_signed(const std::vector<int>& codes, int num_generators) {
  std::vector<int> out;
  out.reserve(codes.size());
  for (int c : codes) {
    if (c == 0 || std::abs(c) > num_generators)
      throw input_error("word letter " + std::to_string(c) +
                        " is outside the alphabet of " +
                        std::to_string(num_generators) + " generators");
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  }
  Word w;
  w.code_ = std::move(out);
  return w;
}

Word Word::reduce(const std::vector<Gen>& letters, int num_generators) {
  std::vector<int> codes;
  codes.reserve(letters.size());
  for (const Gen& g : letters) {
    if (g.sign != 1 && g.sign != -1)
      throw input_error("word letter sign must be +1 or -1");
    codes.push_back(g.sign * (g.index + 1));
  }
  return from_signed(codes, num_generators);
}

int Word::max_generator_index() const {
  int m = -1;
  for (int c : code_) m = std::max(m, std::abs(c) - 1);
  return m;
}

Word Word::inverse() const {
  Word w;
  w.code_.reserve(code_.size());
  for (auto it = code_.rbegin(); it != code_.rend(); ++it) w.code_.push_back(-*it);
  return w;
}

Word Word::concat(const Word& rhs) const {
  std::vector<int> out = code_;
  for (int c : rhs.code_) {
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  }
  Word w;
  w.code_ = std::move(out);
  return w;
}

Word Word::conjugate(const Word& g) const { return g.concat(*this).concat(g.inverse()); }

std::string Word::str() const {
  if (code_.empty()) return "1";
  std::string s;
  for (int c : code_) {
    const int idx = std::abs(c) - 1;
    if (idx < 26) {
      s.push_back(static_cast<char>((c > 0 ? 'a' : 'A') + idx));
    } else {
      s += (c > 0 ? "g" : "G") + std::to_string(idx);
    }
  }
  return s;
}

Word random_reduced_word(Rng& rng, int alphabet_size, int length) {
  if (alphabet_size < 1) throw input_error("random_reduced_word: empty alphabet");
  std::vector<int> codes;
  codes.reserve(length);
  while (static_cast<int>(codes.size()) < length) {
    const int idx = static_cast<int>(rand_below(rng, alphabet_size));
    const int code = rand_below(rng, 2) ? (idx + 1) : -(idx + 1);
    if (!codes.empty() && codes.back() == -code) continue;
    codes.push_back(code);
  }
  return Word::from_signed(codes, alphabet_size);
}

PermGeneratorMap::PermGeneratorMap(std::vector<Permutation> images)
    : images_(std::move(images)) {
  if (images_.empty())
    throw input_error("generator map needs at least one image");
  for (const Permutation& p : images_)
    if (p.degree() != images_[0].degree())
      throw input_error("generator map images disagree on degree");
}

UnitaryGeneratorMap::UnitaryGeneratorMap(std::vector<Eigen::MatrixXcd> images)
    : images_(std::move(images)) {
  if (images_.empty())
    throw input_error("generator map needs at least one image");
  const auto n = images_[0].rows();
  for (const Eigen::MatrixXcd& m : images_) {
    if (m.rows() != n || m.cols() != n)
      throw input_error("generator map images disagree on dimension");
    const double err =
        (m.adjoint() * m - Eigen::MatrixXcd::Identity(n, n)).norm();
    if (err > 1e-12 * static_cast<double>(n))
      throw input_error("generator image is not unitary (||M*M - I||_F = " +
                        std::to_string(err) + ")");
  }
}

Permutation evaluate(const PermGeneratorMap& f, const Word& w) {
  if (w.max_generator_index() >= f.alphabet_size())
    throw input_error("word uses a generator outside the map's alphabet");
  Permutation acc = Permutation::identity(f.degree());
  for (int i = 0; i < w.length(); ++i) {
    const Gen g = w.letter(i);
    const Permutation& m = f.image(g.index);
    acc = acc.compose(g.sign > 0 ? m : m.inverse());
  }
  return acc;
}

Eigen::MatrixXcd evaluate(const UnitaryGeneratorMap& f, const Word& w) {
  if (w.max_generator_index() >= f.alphabet_size())
    throw input_error("word uses a generator outside the map's alphabet");
  const int n = f.dimension();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
  for (int i = 0; i < w.length(); ++i) {
    const Gen g = w.letter(i);
    const Eigen::MatrixXcd& m = f.image(g.index);
    acc = g.sign > 0 ? Eigen::MatrixXcd(acc * m)
                     : Eigen::MatrixXcd(acc * m.adjoint());
  }
  return acc;
}

std::vector<Word> sample_kernel_words(const std::vector<Word>& relators,
                                      int max_len, int count,
                                      std::uint64_t seed,
                                      const KernelWordOptions& opt) {
  if (relators.empty())
    throw input_error("sample_kernel_words: need at least one relator");
  int longest = 0;
  int alphabet = 0;
  for (const Word& r : relators) {
    longest = std::max(longest, r.length());
    alphabet = std::max(alphabet, r.max_generator_index() + 1);
  }
  if (max_len < longest)
    throw input_error("sample_kernel_words: max_len is below the longest relator");

  std::vector<Word> out;
  std::set<std::vector<int>> seen;
  auto push = [&](const Word& w) {
    if (w.empty() || w.length() > max_len) return;
    if (seen.insert(w.signed_codes()).second) out.push_back(w);
  };
  for (const Word& r : relators) push(r);

  Rng rng(seed);
  long long attempts = static_cast<long long>(opt.attempt_factor) * count;
  while (static_cast<int>(out.size()) < count && attempts-- > 0) {
    const int pieces = 1 + static_cast<int>(rand_below(rng, opt.max_conjugates));
    Word w;
    for (int j = 0; j < pieces; ++j) {
      const Word& r = relators[rand_below(rng, relators.size())];
      const Word piece = rand_below(rng, 2) ? r : r.inverse();
      const int glen =
          static_cast<int>(rand_below(rng, opt.max_conjugator_length + 1));
      const Word g = random_reduced_word(rng, alphabet, glen);
      w = w.concat(piece.conjugate(g));
    }
    push(w);
  }
  return out;
}

}  // namespace gsw
