#pragma once

#include <string>
#include <vector>

#include "flopk/numeric.hpp"

namespace flopk {

/// Bijection of {1..n} in one-line notation: image(j) is where j goes.
///
/// Conventions used throughout:
///  * (s o p)(j) = s(p(j)).
///  * A permutation acts on a vector by moving the entry at position j to
///    position image(j).
///  * A word [i1, ..., ik] of adjacent transpositions acts left to right:
///    s_{i1} is applied first, so its product is s_{ik} o ... o s_{i1}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  /// (i, i+1) in S_n.
  static Permutation adjacent(int n, int i);
  static Permutation transposition(int n, int i, int j);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& one_line() const noexcept { return images_; }

  Permutation inverse() const;
  int inversions() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& s, const Permutation& p);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

std::string to_string(const Permutation& p);

using Word = std::vector<int>;

/// Product of a word in S_n under the left-to-right convention.
Permutation word_product(int n, const Word& word);

/// Reduced word for sigma: word_product(n, word) == sigma and
/// word.size() == sigma.inversions().
Word adjacent_word(const Permutation& sigma);

/// (12)(23)...(h-1,h)...(23)(12). Throws DomainError for h < 2.
Permutation duality_sigma(int h);

/// [1, 2, ..., h-1, ..., 2, 1], length 2h - 3.
Word duality_word(int h);

template <class T>
std::vector<T> apply(const Permutation& sigma, const std::vector<T>& v) {
  std::vector<T> out(v.size());
  for (int j = 1; j <= sigma.size(); ++j)
    out[static_cast<std::size_t>(sigma(j) - 1)] = v[static_cast<std::size_t>(j - 1)];
  return out;
}

template <class T>
std::vector<T> apply_word(const Word& word, std::vector<T> v) {
  for (int i : word) std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return v;
}

struct ChamberSort {
  Permutation sigma;
  Word word;
};

/// sigma carries v into the strictly decreasing chamber; word is its
/// reduced word. Throws RegularityViolation on repeated entries.
ChamberSort chamber_sort(const std::vector<Rational>& v);

}  // namespace flopk
