#include "doctest.h"

#include "flopk/errors.hpp"
#include "flopk/kgroup.hpp"
#include "flopk_oracles/oracles.hpp"

using namespace flopk;

namespace {

KVector kv(const BoxShape& box, std::vector<Integer> coords) { return KVector(box, std::move(coords)); }

const std::vector<BoxShape> kFlopBoxes{BoxShape(1, 1), BoxShape(1, 2), BoxShape(1, 3), BoxShape(1, 4),
                                       BoxShape(2, 2), BoxShape(2, 3), BoxShape(3, 3)};

}  // namespace

TEST_CASE("expand_in_basis examples") {
  const BoxShape p2(1, 2);
  CHECK(expand_in_basis(TautExpr::structure_sheaf(), p2) == KVector::basis_vector(p2, {}));
  CHECK(expand_in_basis(TautExpr::line(1), p2) == kv(p2, {3, -3, 1}));
  // Theta (x) O(-1) on P^2 = 3[O] - [O(-1)]
  CHECK(expand_in_basis(parse_expression("L[1](Theta)*O(-1)"), p2) == kv(p2, {3, -1, 0}));
}

TEST_CASE("expression parser") {
  const BoxShape box(2, 2);
  CHECK(expand_in_basis(parse_expression("3*O - O(-1)"), box) ==
        expand_in_basis(3 * TautExpr::structure_sheaf() - TautExpr::line(-1), box));
  CHECK(expand_in_basis(parse_expression("S[2,1](tau*)"), box) == dual_class({2, 1}, box));
  CHECK(expand_in_basis(parse_expression("-L[2](tau) + O(-1)"), box) == KVector(box));
  CHECK(expand_in_basis(parse_expression("2"), box) == 2 * KVector::basis_vector(box, {}));
  CHECK_THROWS_AS(parse_expression(""), DomainError);
  CHECK_THROWS_AS(parse_expression("X(tau)"), DomainError);
  CHECK_THROWS_AS(parse_expression("S[2](foo)"), DomainError);
  CHECK_THROWS_AS(parse_expression("O(1"), DomainError);
  CHECK_THROWS_AS(parse_expression("O(1) +"), DomainError);
}

TEST_CASE("basis round trip") {
  for (const BoxShape box : {BoxShape(2, 3), BoxShape(3, 2), BoxShape(1, 4)})
    for (const auto& alpha : enumerate_box(box))
      CHECK(expand_in_basis(TautExpr::schur(alpha), box) == KVector::basis_vector(box, alpha));
}

TEST_CASE("non-integral characters are rejected, not rounded") {
  const BoxShape p1(1, 1);
  const auto half = SchubertVector::schubert(p1, {1}, Rational(1, 2));
  CHECK_THROWS_AS(expand_character(half), NonIntegralExpansion);
}

TEST_CASE("line bundle classes") {
  CHECK(line_bundle_class(0, BoxShape(2, 2)) == KVector::basis_vector(BoxShape(2, 2), {}));
  CHECK(line_bundle_class(-1, BoxShape(1, 1)) == KVector::basis_vector(BoxShape(1, 1), {1}));
  CHECK(line_bundle_class(1, BoxShape(1, 1)) == kv(BoxShape(1, 1), {2, -1}));
  CHECK(line_bundle_class(-1, BoxShape(2, 2)) == KVector::basis_vector(BoxShape(2, 2), {1, 1}));
  CHECK(line_bundle_class(-2, BoxShape(2, 2)) == KVector::basis_vector(BoxShape(2, 2), {2, 2}));
}

TEST_CASE("line bundles on projective space match Z[L]/(1-L)^{n+1}") {
  for (int n = 1; n <= 5; ++n)
    for (int k = -6; k <= 6; ++k)
      CHECK(line_bundle_class(k, BoxShape(1, n)).coords() == oracle::projective_line_class(n, k));
}

TEST_CASE("dual classes") {
  CHECK(dual_class({}, BoxShape(2, 3)) == KVector::basis_vector(BoxShape(2, 3), {}));
  CHECK(dual_class({1}, BoxShape(1, 1)) == kv(BoxShape(1, 1), {2, -1}));
  CHECK(dual_class({1}, BoxShape(1, 2)) == kv(BoxShape(1, 2), {3, -3, 1}));
  CHECK_THROWS_AS(dual_class({3}, BoxShape(1, 2)), DomainError);
}

TEST_CASE("flop matrix examples") {
  CHECK(flop_matrix(BoxShape(1, 1)) == IntegerMatrix{{1, 2}, {0, -1}});
  CHECK(flop_matrix(BoxShape(1, 2)) == IntegerMatrix{{1, 3, 6}, {0, -3, -8}, {0, 1, 3}});
  CHECK(flop_matrix(BoxShape(2, 3)).rows() == 10);
}

TEST_CASE("flop matrices are unimodular involutions") {
  for (const auto& box : kFlopBoxes) {
    CAPTURE(box.rows);
    CAPTURE(box.cols);
    const auto m = flop_matrix(box);
    CHECK(is_unimodular(m));
    CHECK(m * m == IntegerMatrix::identity(m.rows()));
  }
}

TEST_CASE("t = 1 flop matrices match the projective line oracle") {
  for (int n = 1; n <= 4; ++n) {
    const auto m = flop_matrix(BoxShape(1, n));
    for (int k = 0; k <= n; ++k) CHECK(m.column(static_cast<std::size_t>(k)) == oracle::projective_line_class(n, k));
  }
}

TEST_CASE("twist relation") {
  for (const auto& box : kFlopBoxes) {
    const auto report = twist_relation(box);
    CHECK(report.per_alpha_holds);
    CHECK(report.uniform_twist_holds);
    REQUIRE(report.per_alpha.size() == enumerate_box(box).size());
    for (const auto& match : report.per_alpha) {
      // Sigma^alpha(tau*) = Sigma^beta(tau) (x) O(c(alpha)) with beta the
      // complement of reversed alpha in the t x c(alpha) rectangle.
      CHECK(match.twist == match.alpha.cols());
      std::vector<int> beta(static_cast<std::size_t>(box.rows));
      for (int i = 0; i < box.rows; ++i)
        beta[static_cast<std::size_t>(i)] = match.alpha.cols() - match.alpha.part(box.rows - 1 - i);
      CHECK(match.beta == Partition(beta));
    }
  }
}

TEST_CASE("classes supported on the zero section vanish") {
  // 0 -> Sigma^alpha tau -> Sigma^alpha tau -> Sigma^alpha tau|_{T*G} -> 0
  const BoxShape box(2, 2);
  for (const auto& alpha : enumerate_box(box)) {
    const KVector cls = KVector::basis_vector(box, alpha);
    CHECK(cls - cls == KVector(box));
  }
}

TEST_CASE("matrix JSON round trip") {
  const BoxShape box(2, 2);
  const auto report = make_matrix_report(box, flop_matrix(box));
  CHECK(report.det);
  CHECK(abs(*report.det) == 1);
  const std::string text = to_json(report);
  CHECK(text.rfind("{\"box\":[2,2],\"basis\":[\"-\",\"1\",\"2\",\"1,1\",\"2,1\",\"2,2\"],\"matrix\":[[", 0) == 0);
  const auto parsed = parse_matrix_report(text);
  CHECK(parsed.matrix == report.matrix);
  CHECK(to_json(parsed) == text);
  CHECK(to_json(parse_matrix_report(to_json(report, 2)), 2) == to_json(report, 2));
  CHECK_THROWS_AS(parse_matrix_report("{\"box\":[1]}"), DomainError);
  CHECK_THROWS_AS(parse_matrix_report("not json"), DomainError);
}

TEST_CASE("K-vector rendering") {
  CHECK(to_string(kv(BoxShape(1, 2), {3, -3, 1})) == "3[-] - 3[1] + 1[2]");
  CHECK(to_string(KVector(BoxShape(1, 2))) == "0");
}
