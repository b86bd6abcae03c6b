#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flopk/chow.hpp"
#include "flopk/matrix.hpp"
#include "flopk/numeric.hpp"
#include "flopk/partitions.hpp"

namespace flopk {

/// Integer coordinates in the basis {[Sigma^alpha tau]} of K(G), ordered as
/// enumerate_box. The same lattice models K(T*G) and K(E(H)) through the
/// bundle projections, so one type carries all three.
class KVector {
 public:
  explicit KVector(const BoxShape& box);
  KVector(const BoxShape& box, std::vector<Integer> coords);

  static KVector basis_vector(const BoxShape& box, const Partition& alpha);

  const BoxShape& box() const noexcept { return box_; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  /// Coordinate of [Sigma^alpha tau].
  const Integer& at(const Partition& alpha) const;

  KVector& operator+=(const KVector& other);
  KVector& operator-=(const KVector& other);
  KVector& operator*=(const Integer& scalar);
  friend KVector operator+(KVector a, const KVector& b) { return a += b; }
  friend KVector operator-(KVector a, const KVector& b) { return a -= b; }
  friend KVector operator*(const Integer& s, KVector a) { return a *= s; }

  friend bool operator==(const KVector&, const KVector&) = default;

 private:
  BoxShape box_;
  std::vector<Integer> coords_;
};

/// "3[-] - 1[1]" style rendering with partition labels.
std::string to_string(const KVector& v);

// Tautological class expressions.

enum class BaseBundle { Tau, Quotient, Tangent };

/// A Schur functor applied to tau, q or the tangent bundle Hom(tau, q),
/// optionally dualized; or a line bundle O(k) with O(-1) = det tau.
struct SchurFactor {
  Partition shape;
  BaseBundle base = BaseBundle::Tau;
  bool dual = false;
  friend bool operator==(const SchurFactor&, const SchurFactor&) = default;
};

struct LineBundle {
  int twist = 0;
  friend bool operator==(const LineBundle&, const LineBundle&) = default;
};

using Factor = std::variant<SchurFactor, LineBundle>;

struct ExprTerm {
  Integer coefficient = 1;
  std::vector<Factor> factors;  // tensor product; empty means O
};

/// Formal integer combination of tensor products of tautological bundles.
class TautExpr {
 public:
  TautExpr() = default;
  explicit TautExpr(Factor f) { terms_.push_back({1, {std::move(f)}}); }

  static TautExpr structure_sheaf() { return TautExpr(LineBundle{0}); }
  static TautExpr line(int k) { return TautExpr(LineBundle{k}); }
  static TautExpr schur(const Partition& alpha, BaseBundle base = BaseBundle::Tau, bool dual = false) {
    return TautExpr(SchurFactor{alpha, base, dual});
  }
  static TautExpr wedge(int i, BaseBundle base, bool dual = false) {
    return schur(column(i), base, dual);
  }

  const std::vector<ExprTerm>& terms() const noexcept { return terms_; }

  TautExpr& operator+=(const TautExpr& other);
  TautExpr& operator-=(const TautExpr& other);
  TautExpr& operator*=(const Integer& scalar);
  friend TautExpr operator+(TautExpr a, const TautExpr& b) { return a += b; }
  friend TautExpr operator-(TautExpr a, const TautExpr& b) { return a -= b; }
  friend TautExpr operator*(const Integer& s, TautExpr a) { return a *= s; }
  /// Tensor product, distributed over the terms.
  friend TautExpr operator*(const TautExpr& a, const TautExpr& b);

 private:
  std::vector<ExprTerm> terms_;
};

/// Parses the text form used by the CLI, e.g.
///   "3*O - O(-1)",  "L[2](Theta)*O(-1)",  "S[2,1](tau*)",  "L[1](q)"
/// Terms are separated by + or -, factors by *, an optional leading
/// integer is the coefficient. Bases: tau, q, Theta, each optionally
/// followed by * for the dual. Throws DomainError on malformed input.
TautExpr parse_expression(const std::string& text);

/// Chern character of the expression in A(G)_Q.
SchubertVector character(const TautExpr& expr, const BoxShape& box);

/// Coordinates of expr in {[Sigma^alpha tau]}, found by solving against
/// ch_matrix. Throws NonIntegralExpansion if the solution is not integral.
KVector expand_in_basis(const TautExpr& expr, const BoxShape& box);

/// Same solve for an arbitrary character.
KVector expand_character(const SchubertVector& ch);

/// [O(k)], with O(-1) = wedge^t tau.
KVector line_bundle_class(int k, const BoxShape& box);

/// [Sigma^alpha tau*] in the basis {[Sigma^beta tau]}.
KVector dual_class(const Partition& alpha, const BoxShape& box);

/// Matrix of the flop map on K-groups: column alpha = dual_class(alpha).
/// Represents both the map for the extended cotangent bundles and the
/// one for the cotangent bundles.
IntegerMatrix flop_matrix(const BoxShape& box);

/// Sigma^alpha(tau*) = Sigma^beta(tau) (x) O(c): the partition beta and the
/// twist c found for one alpha.
struct TwistMatch {
  Partition alpha;
  Partition beta;
  int twist = 0;
};

struct TwistReport {
  /// One match per alpha with the smallest twist in [0, h-t] that works.
  std::vector<TwistMatch> per_alpha;
  /// Whether {[Sigma^alpha tau*]} = {[Sigma^beta tau (x) O(h-t)]} as sets.
  bool uniform_twist_holds = false;
  /// Whether every alpha found some match.
  bool per_alpha_holds = false;
};

TwistReport twist_relation(const BoxShape& box);

// Matrix JSON interchange.

struct MatrixReport {
  BoxShape box;
  std::vector<std::string> basis;
  IntegerMatrix matrix;
  std::optional<Integer> det;
  std::vector<Integer> snf;
};

/// Builds the report for a flop-style matrix on a box, filling det and SNF.
MatrixReport make_matrix_report(const BoxShape& box, const IntegerMatrix& m);

/// {"box":[t,w],"basis":[...],"matrix":[[...]],"det":"...","snf":[...]},
/// integers as decimal strings, fixed key order.
std::string to_json(const MatrixReport& report, int indent = -1);
/// Throws DomainError on schema violations.
MatrixReport parse_matrix_report(const std::string& json_text);

}  // namespace flopk
