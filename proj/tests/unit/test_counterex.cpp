#include "doctest.h"

#include "flopk/counterex.hpp"
#include "flopk/errors.hpp"

using namespace flopk;

TEST_CASE("Koszul terms on T*P^2") {
  // [Theta (x) O(-1)] = 3[O] - [O(-1)]
  CHECK(to_line_basis(koszul_term(3, 1)) == std::vector<Integer>{0, 3, -1});
  // [wedge^2 Theta (x) O(-1)] = 3[O(1)] - 3[O] + [O(-1)]
  CHECK(to_line_basis(koszul_term(3, 2)) == std::vector<Integer>{3, -3, 1});
}

TEST_CASE("ideal sheaf class") {
  // [I (x) O(-1)] = -2[O(-1)] + 6[O] - 3[O(1)]
  CHECK(to_line_basis(koszul_ideal_class(3)) == std::vector<Integer>{-3, 6, -2});
  // On T*P^1 the resolution has one term: [O(1)] = 2[O] - [O(-1)].
  CHECK(koszul_ideal_class(2) == KVector(BoxShape(1, 1), {2, -1}));
  CHECK(to_line_basis(koszul_ideal_class(2)) == std::vector<Integer>{1, 0});
  CHECK_THROWS_AS(koszul_ideal_class(1), DomainError);
}

TEST_CASE("line basis is a unimodular change") {
  for (int h = 2; h <= 6; ++h) {
    const auto change = line_basis_change(h);
    CHECK(is_unimodular(change));
    const KVector v(BoxShape(1, h - 1), std::vector<Integer>(static_cast<std::size_t>(h), 1));
    CHECK(from_line_basis(h, to_line_basis(v)) == v);
  }
  CHECK(line_basis_change(3) == IntegerMatrix{{3, 1, 0}, {-3, 0, 1}, {1, 0, 0}});
}

TEST_CASE("main-component map") {
  const auto m = psi_prime_matrix();
  CHECK(m == IntegerMatrix{{1, 0, -3}, {0, 1, 6}, {0, 0, -2}});
  CHECK(smith_normal_form(m) == std::vector<Integer>{1, 1, 2});
  CHECK(image_index(m) == Integer(2));
  const auto canonical = psi_prime_matrix_canonical();
  CHECK(image_index(canonical) == Integer(2));
  CHECK(smith_normal_form(canonical) == std::vector<Integer>{1, 1, 2});
}

TEST_CASE("image index") {
  CHECK(image_index(IntegerMatrix::identity(3)) == Integer(1));
  CHECK_FALSE(image_index(IntegerMatrix{{1, 2}, {2, 4}}).has_value());
  CHECK(image_index(flop_matrix(BoxShape(1, 2))) == Integer(1));
  CHECK_THROWS_AS(image_index(IntegerMatrix(2, 3)), DomainError);
  for (const BoxShape box : {BoxShape(1, 1), BoxShape(1, 3), BoxShape(2, 2), BoxShape(2, 3)})
    CHECK(image_index(flop_matrix(box)) == Integer(1));
}
