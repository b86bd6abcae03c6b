#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flopk/numeric.hpp"
#include "flopk/partitions.hpp"

namespace flopk {

/// Weight of the irreducible homogeneous bundle Sigma^a(tau*) (x) Sigma^b(q*)
/// on G(t,h). Both blocks are non-increasing; entries may be negative.
///
/// Under this convention tau* and q* play the roles of quotient and
/// subbundle of the trivial bundle H*, and the GL_h weight fed to Bott's
/// algorithm is the concatenation (a | b). Consequences:
///   O(k) = (det tau*)^k          -> a = (k,...,k),  b = 0
///   Sigma^mu tau                 -> a = (-mu_t, ..., -mu_1)
///   Sigma^nu q*                  -> b = nu
struct Weight {
  std::vector<int> a;  // t entries
  std::vector<int> b;  // h - t entries

  /// Throws DomainError unless both blocks are non-increasing.
  void validate() const;

  int t() const noexcept { return static_cast<int>(a.size()); }
  int h() const noexcept { return static_cast<int>(a.size() + b.size()); }

  std::vector<int> concatenated() const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight line_bundle_weight(int k, const BoxShape& box);

/// Text form "a1,a2|b1,b2" (either side may be empty).
Weight parse_weight(const std::string& text);
std::string to_string(const Weight& w);

struct Cohomology {
  int degree = 0;
  Integer dimension;
  friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

/// Cohomology of the bundle: nullopt when every group vanishes, otherwise
/// the single nonzero degree and its dimension.
std::optional<Cohomology> bott_cohomology(const Weight& w);

/// Dimension of the irreducible GL_n module with dominant weight lambda
/// (Weyl dimension formula).
Integer weyl_dimension(const std::vector<int>& lambda);

/// Weight of E^* (x) K with K = O(-h), whose cohomology is Serre dual.
Weight serre_dual(const Weight& w);

/// Summands Sigma^mu tau (x) Sigma^{mu'} q* of Omega^p = wedge^p(tau (x) q*),
/// one per mu in the box with |mu| = p. Throws DomainError if p is out of
/// range.
std::vector<Weight> exterior_cotangent_decomposition(int p, const BoxShape& box);

/// h^{p,q}, indexed [p][q], for 0 <= p, q <= dim G.
using HodgeTable = std::vector<std::vector<Integer>>;
HodgeTable hodge_numbers(const BoxShape& box);

/// Coefficients of the Gaussian binomial [h choose t]_q.
std::vector<Integer> gaussian_binomial(int h, int t);

}  // namespace flopk
