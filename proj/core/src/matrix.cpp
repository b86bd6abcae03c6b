#include "flopk/matrix.hpp"

#include <algorithm>
#include <utility>

namespace flopk {

namespace {

void require_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols) throw DomainError(std::string(what) + " needs a square matrix");
}

}  // namespace

Integer determinant(const IntegerMatrix& m) {
  require_square(m.rows(), m.cols(), "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Exact: Sylvester's identity guarantees divisibility.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RationalMatrix& m) {
  require_square(m.rows(), m.cols(), "determinant");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational factor = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  require_square(m.rows(), m.cols(), "inverse");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(k, c), a(pivot, c));
        std::swap(inv(k, c), inv(pivot, c));
      }
    }
    const Rational scale = 1 / a(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      a(k, c) *= scale;
      inv(k, c) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational factor = a(i, k);
      for (std::size_t c = 0; c < n; ++c) {
        a(i, c) -= factor * a(k, c);
        inv(i, c) -= factor * inv(k, c);
      }
    }
  }
  return inv;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

std::vector<Integer> smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t diag = std::min(rows, cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(i, c), a(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, i), a(r, j));
  };

  for (std::size_t k = 0; k < diag; ++k) {
    while (true) {
      // Pivot on the least nonzero absolute value in the trailing block.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t r = k; r < rows; ++r)
        for (std::size_t c = k; c < cols; ++c)
          if (a(r, c) != 0 && (!best || abs(a(r, c)) < abs(a(best->first, best->second))))
            best = {r, c};
      if (!best) break;  // trailing block is zero
      swap_rows(k, best->first);
      swap_cols(k, best->second);

      bool clean = true;
      for (std::size_t r = k + 1; r < rows; ++r) {
        if (a(r, k) == 0) continue;
        const Integer q = a(r, k) / a(k, k);
        for (std::size_t c = k; c < cols; ++c) a(r, c) -= q * a(k, c);
        if (a(r, k) != 0) clean = false;
      }
      for (std::size_t c = k + 1; c < cols; ++c) {
        if (a(k, c) == 0) continue;
        const Integer q = a(k, c) / a(k, k);
        for (std::size_t r = k; r < rows; ++r) a(r, c) -= q * a(r, k);
        if (a(k, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: the pivot must divide the whole trailing block.
      std::optional<std::size_t> offending_row;
      for (std::size_t r = k + 1; r < rows && !offending_row; ++r)
        for (std::size_t c = k + 1; c < cols; ++c)
          if (a(r, c) % a(k, k) != 0) {
            offending_row = r;
            break;
          }
      if (!offending_row) break;
      for (std::size_t c = k; c < cols; ++c) a(k, c) += a(*offending_row, c);
    }
  }

  std::vector<Integer> factors(diag);
  for (std::size_t k = 0; k < diag; ++k) factors[k] = abs(a(k, k));
  return factors;
}

bool is_unimodular(const IntegerMatrix& m) {
  const Integer det = determinant(m);
  return det == 1 || det == -1;
}

}  // namespace flopk
