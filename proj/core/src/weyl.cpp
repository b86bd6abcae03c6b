#include "flopk/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "flopk/errors.hpp"

namespace flopk {

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
      throw DomainError("not a permutation in one-line notation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n) throw DomainError("transposition index out of range");
  std::vector<int> v = identity(n).images_;
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(j - 1)]);
  return Permutation(std::move(v));
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("adjacent transposition index out of range");
  return transposition(n, i, i + 1);
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int j = 1; j <= size(); ++j) v[static_cast<std::size_t>((*this)(j) - 1)] = j;
  return Permutation(std::move(v));
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= size(); ++j)
    if ((*this)(j) != j) return false;
  return true;
}

Permutation operator*(const Permutation& s, const Permutation& p) {
  if (s.size() != p.size()) throw DomainError("composing permutations of different degree");
  std::vector<int> v(p.images_.size());
  for (int j = 1; j <= p.size(); ++j) v[static_cast<std::size_t>(j - 1)] = s(p(j));
  return Permutation(std::move(v));
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  out << '[';
  for (int j = 1; j <= p.size(); ++j) out << (j > 1 ? "," : "") << p(j);
  out << ']';
  return out.str();
}

Permutation word_product(int n, const Word& word) {
  Permutation out = Permutation::identity(n);
  for (int i : word) out = Permutation::adjacent(n, i) * out;
  return out;
}

Word adjacent_word(const Permutation& sigma) {
  // sigma = s_{ik} o ... o s_{i1}, so i1 is a right descent of sigma.
  Word word;
  Permutation current = sigma;
  const int n = sigma.size();
  bool found = true;
  while (found) {
    found = false;
    for (int i = 1; i < n; ++i)
      if (current(i) > current(i + 1)) {
        word.push_back(i);
        current = current * Permutation::adjacent(n, i);
        found = true;
        break;
      }
  }
  return word;
}

Word duality_word(int h) {
  if (h < 2) throw DomainError("duality word needs h >= 2");
  Word word;
  for (int i = 1; i <= h - 1; ++i) word.push_back(i);
  for (int i = h - 2; i >= 1; --i) word.push_back(i);
  return word;
}

Permutation duality_sigma(int h) {
  if (h < 2) throw DomainError("duality element needs h >= 2");
  // Functional product of (12)(23)...(h-1,h)(h-2,h-1)...(12), leftmost
  // factor outermost.
  std::vector<Permutation> factors;
  for (int i = 1; i <= h - 1; ++i) factors.push_back(Permutation::transposition(h, i, i + 1));
  for (int i = h - 2; i >= 1; --i) factors.push_back(Permutation::transposition(h, i, i + 1));
  Permutation out = Permutation::identity(h);
  for (const auto& f : factors) out = out * f;
  return out;
}

ChamberSort chamber_sort(const std::vector<Rational>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return v[static_cast<std::size_t>(i)] > v[static_cast<std::size_t>(j)];
  });
  for (int k = 0; k + 1 < n; ++k)
    if (v[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] ==
        v[static_cast<std::size_t>(order[static_cast<std::size_t>(k + 1)])])
      throw RegularityViolation("chamber vector has a repeated entry: not a regular class");
  // Entry at position j moves to its rank in decreasing order.
  std::vector<int> images(v.size());
  for (int rank = 0; rank < n; ++rank)
    images[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = rank + 1;
  Permutation sigma(std::move(images));
  Word word = adjacent_word(sigma);
  return {std::move(sigma), std::move(word)};
}

}  // namespace flopk
