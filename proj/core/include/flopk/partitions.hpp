#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flopk/numeric.hpp"

namespace flopk {

/// A Young diagram stored as its non-increasing, strictly positive row
/// lengths. The empty partition has no parts.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Trailing zeros are dropped; throws DomainError on negative or
  /// increasing parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Number of rows, r(alpha).
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  /// Number of columns, c(alpha) = first part.
  int cols() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int size() const noexcept;
  /// Row length with zero padding past the last row.
  int part(int i) const noexcept {
    return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// Diagram containment: every row of *this fits under the row of other.
  bool contained_in(const Partition& other) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// The t x (h-t) rectangle that houses the K-group basis of G(t,h).
struct BoxShape {
  int rows = 1;  // t
  int cols = 1;  // h - t

  BoxShape() = default;
  /// Throws DomainError unless both sides are positive.
  BoxShape(int rows_, int cols_);

  static BoxShape grassmannian(int t, int h) { return BoxShape(t, h - t); }

  int t() const noexcept { return rows; }
  int h() const noexcept { return rows + cols; }
  int dimension() const noexcept { return rows * cols; }
  bool fits(const Partition& p) const noexcept {
    return p.rows() <= rows && p.cols() <= cols;
  }

  friend bool operator==(const BoxShape&, const BoxShape&) = default;
  friend auto operator<=>(const BoxShape&, const BoxShape&) = default;
};

/// Text form: comma-separated parts ("2,1"); "-" is the empty partition.
std::string to_string(const Partition& p);
Partition parse_partition(const std::string& text);

/// All partitions in the box, graded by size and lexicographically
/// descending inside each grade. The count is C(rows + cols, rows).
std::vector<Partition> enumerate_box(const BoxShape& box);

/// All partitions of n with at most max_rows rows and parts at most
/// max_part (unbounded when negative), lexicographically descending.
std::vector<Partition> partitions_of(int n, int max_rows = -1,
                                     int max_part = -1);

Partition conjugate(const Partition& p);

/// (1^n), the single column of height n.
Partition column(int n);

using LRTable = std::map<Partition, Integer>;

/// Littlewood-Richardson coefficients c^nu_{lambda,mu}, counted as LR
/// tableaux of shape nu/lambda and content mu. With a box, products that
/// leave the box are dropped.
LRTable lr_coefficients(const Partition& lambda, const Partition& mu,
                        const std::optional<BoxShape>& box = std::nullopt);

/// Partitions obtained by adding a horizontal strip of exactly n boxes,
/// i.e. the Pieri rule support. Used by the Chow ring and by tests.
std::vector<Partition> add_horizontal_strip(const Partition& p, int n);

}  // namespace flopk
