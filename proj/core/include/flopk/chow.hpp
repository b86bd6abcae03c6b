#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "flopk/matrix.hpp"
#include "flopk/numeric.hpp"
#include "flopk/partitions.hpp"

namespace flopk {

/// Basis, grading and structure constants of A(G(t,h)) in the Schubert
/// basis. Instances are immutable and shared per box.
class ChowRing {
 public:
  struct Term {
    std::size_t index;
    Integer coefficient;
  };

  /// Process-wide instance for the box; built once and thread-safe.
  static std::shared_ptr<const ChowRing> of(const BoxShape& box);

  explicit ChowRing(const BoxShape& box);

  const BoxShape& box() const noexcept { return box_; }
  const std::vector<Partition>& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  int degree(std::size_t i) const { return basis_[i].size(); }

  /// Position of p in the canonical order. Throws DomainError if p is not
  /// in the box.
  std::size_t index_of(const Partition& p) const;

  /// sigma_i * sigma_j as Schubert terms (already truncated to the box).
  const std::vector<Term>& product(std::size_t i, std::size_t j) const {
    return products_[i * rank() + j];
  }

 private:
  BoxShape box_;
  std::vector<Partition> basis_;
  std::vector<std::vector<Term>> products_;
};

/// Element of A(G)_Q written in the Schubert basis.
class SchubertVector {
 public:
  /// The zero class.
  explicit SchubertVector(const BoxShape& box);

  static SchubertVector unit(const BoxShape& box);
  /// coefficient * sigma_p. Throws DomainError when p is outside the box.
  static SchubertVector schubert(const BoxShape& box, const Partition& p,
                                 const Rational& coefficient = 1);

  const BoxShape& box() const noexcept { return ring_->box(); }
  const ChowRing& ring() const noexcept { return *ring_; }

  /// Zero for partitions outside the box.
  Rational coefficient(const Partition& p) const;
  /// Nonzero terms in canonical basis order.
  std::vector<std::pair<Partition, Rational>> terms() const;
  const std::vector<Rational>& dense() const noexcept { return coeffs_; }
  std::vector<Rational>& dense() noexcept { return coeffs_; }
  bool is_zero() const;

  /// Homogeneous component of codimension d.
  SchubertVector graded_part(int d) const;

  SchubertVector& operator+=(const SchubertVector& other);
  SchubertVector& operator-=(const SchubertVector& other);
  SchubertVector& operator*=(const Rational& scalar);

  friend SchubertVector operator+(SchubertVector a, const SchubertVector& b) { return a += b; }
  friend SchubertVector operator-(SchubertVector a, const SchubertVector& b) { return a -= b; }
  friend SchubertVector operator-(SchubertVector a) { return a *= Rational(-1); }
  friend SchubertVector operator*(SchubertVector a, const Rational& s) { return a *= s; }
  friend SchubertVector operator*(const Rational& s, SchubertVector a) { return a *= s; }
  friend SchubertVector operator*(const SchubertVector& a, const SchubertVector& b);

  friend bool operator==(const SchubertVector& a, const SchubertVector& b);

 private:
  std::shared_ptr<const ChowRing> ring_;
  std::vector<Rational> coeffs_;
};

/// Bilinear Schubert product with box truncation. Throws BoxMismatch.
SchubertVector schubert_multiply(const SchubertVector& a, const SchubertVector& b);

SchubertVector power(const SchubertVector& x, int exponent);

/// Truncated exponential sum_k x^k / k!; x must have no constant term.
SchubertVector exp_series(const SchubertVector& x);

/// Adams operation on a Chern character: the codimension-d part is
/// scaled by k^d. k = -1 is duality.
SchubertVector adams(const SchubertVector& ch, int k);

inline SchubertVector dual_character(const SchubertVector& ch) { return adams(ch, -1); }

/// c_0(tau), ..., c_t(tau), solved from c(tau) c(q) = 1 with
/// c_i(q) = sigma_(i).
std::vector<SchubertVector> chern_classes_tau(const BoxShape& box);

/// c_0(q), ..., c_{h-t}(q): the special Schubert classes.
std::vector<SchubertVector> chern_classes_quotient(const BoxShape& box);

/// Chern character of a bundle of the given rank from its Chern classes,
/// via Newton's identities for the power sums of the Chern roots.
SchubertVector character_from_chern(int rank, const std::vector<SchubertVector>& chern);

/// ch(Sigma^alpha E) from ch(E), by expanding the Schur function in power
/// sums and replacing p_k with the Adams operation psi^k.
SchubertVector schur_functor(const SchubertVector& ch, const Partition& alpha);

inline SchubertVector exterior_power(const SchubertVector& ch, int i) {
  return schur_functor(ch, column(i));
}

SchubertVector ch_tau(const BoxShape& box);
SchubertVector ch_quotient(const BoxShape& box);

/// ch(Sigma^alpha tau). Throws DomainError if alpha leaves the box.
SchubertVector chern_character(const Partition& alpha, const BoxShape& box);

/// Column j = ch(Sigma^{basis_j} tau), row i = coefficient of
/// sigma_{basis_i}; both in enumerate_box order.
RationalMatrix ch_matrix(const BoxShape& box);

// Symmetric-function helpers.

/// Irreducible S_n character chi^lambda at cycle type rho
/// (Murnaghan-Nakayama rule).
Integer sn_character(const Partition& lambda, const Partition& rho);

/// Size of the centralizer of a permutation of cycle type rho.
Integer centralizer_size(const Partition& rho);

}  // namespace flopk
