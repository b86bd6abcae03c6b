#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flopk/errors.hpp"
#include "flopk/numeric.hpp"

namespace flopk {

/// Element of the prime field F_p. The modulus travels with the value;
/// mixing moduli throws DomainError.
class ModP {
 public:
  ModP(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  friend ModP operator+(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a, const ModP& b);
  friend ModP operator*(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a);
  friend bool operator==(const ModP&, const ModP&) = default;

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Polynomial with integer coefficients in a fixed number of variables.
/// Used to check identities symbolically.
class Polynomial {
 public:
  using Monomial = std::vector<int>;

  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}
  static Polynomial variable(std::size_t variables, std::size_t index);
  static Polynomial constant(std::size_t variables, const Integer& c);

  std::size_t variables() const noexcept { return variables_; }
  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, const Integer& c);

  std::size_t variables_;
  std::map<Monomial, Integer> terms_;
};

std::string to_string(const Polynomial& p, const std::vector<std::string>& names);

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Integer& x) { return x == 0; }
inline bool is_zero(const ModP& x) { return x.value() == 0; }
inline bool is_zero(const Polynomial& x) { return x.is_zero(); }

/// Homogeneous coordinates (alpha : x : y : z : w) on a fibre of the
/// projectivized extended cotangent bundle over G(2,4).
template <class T>
struct AffinePoint5 {
  T alpha, x, y, z, w;
};

/// Pluecker coordinates (p12 : p13 : p14 : p23 : p24 : p34).
template <class T>
struct PlueckerPoint {
  T p12, p13, p14, p23, p24, p34;

  std::array<T, 6> as_array() const { return {p12, p13, p14, p23, p24, p34}; }
};

/// (x, y, z, w, s, t, u, v) for the 2 x 4 matrix
///   [  x  y  z   w ]
///   [ -v  t  u  -s ]
template <class T>
struct DeterminantalPoint {
  T x, y, z, w, s, t, u, v;
};

/// (alpha : x : y : z : w) -> (alpha^2 : alpha z : alpha w : -alpha x :
/// -alpha y : xw - yz).
template <class T>
PlueckerPoint<T> gamma_map(const AffinePoint5<T>& pt) {
  return {pt.alpha * pt.alpha, pt.alpha * pt.z, pt.alpha * pt.w,
          -(pt.alpha * pt.x),  -(pt.alpha * pt.y), pt.x * pt.w - pt.y * pt.z};
}

/// p12 p34 - p13 p24 + p14 p23.
template <class T>
T quadric_value(const PlueckerPoint<T>& pt) {
  return pt.p12 * pt.p34 - pt.p13 * pt.p24 + pt.p14 * pt.p23;
}

/// True iff gamma_map vanishes at pt, i.e. alpha = xw - yz = 0.
/// Throws DomainError for the all-zero point.
template <class T>
bool is_indeterminate(const AffinePoint5<T>& pt) {
  if (is_zero(pt.alpha) && is_zero(pt.x) && is_zero(pt.y) && is_zero(pt.z) && is_zero(pt.w))
    throw DomainError("the zero vector is not a projective point");
  const auto image = gamma_map(pt).as_array();
  for (const auto& c : image)
    if (!is_zero(c)) return false;
  return true;
}

/// All six 2x2 minors of the matrix vanish (rank <= 1).
template <class T>
bool determinantal_membership(const DeterminantalPoint<T>& p) {
  const std::array<T, 4> top{p.x, p.y, p.z, p.w};
  const std::array<T, 4> bottom{-p.v, p.t, p.u, -p.s};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (!is_zero(top[i] * bottom[j] - top[j] * bottom[i])) return false;
  return true;
}

/// Fibre of the Springer resolution over a point of rank i: G(t-i, h-2i).
struct SpringerFiber {
  int t = 0;
  int h = 0;
  int dimension = 0;
};

/// Throws DomainError unless 0 <= i <= t <= h/2.
SpringerFiber springer_fiber(int t, int h, int i);

}  // namespace flopk
