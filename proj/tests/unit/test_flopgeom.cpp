#include "doctest.h"

#include <random>

#include "flopk/flopgeom.hpp"

using namespace flopk;

namespace {

constexpr std::uint64_t kField = 32003;

AffinePoint5<Rational> q5(int a, int x, int y, int z, int w) { return {a, x, y, z, w}; }

ModP fp(std::int64_t v) { return ModP(v, kField); }

}  // namespace

TEST_CASE("gamma map examples") {
  auto image = gamma_map(q5(1, 0, 0, 0, 0)).as_array();
  CHECK(image == std::array<Rational, 6>{1, 0, 0, 0, 0, 0});
  image = gamma_map(q5(0, 1, 0, 0, 1)).as_array();
  CHECK(image == std::array<Rational, 6>{0, 0, 0, 0, 0, 1});
  image = gamma_map(q5(1, 1, 2, 3, 4)).as_array();
  CHECK(image == std::array<Rational, 6>{1, 3, 4, -1, -2, -2});
}

TEST_CASE("quadric values") {
  CHECK(quadric_value(PlueckerPoint<Rational>{1, 0, 0, 0, 0, 0}) == 0);
  CHECK(quadric_value(PlueckerPoint<Rational>{1, 1, 1, 1, 1, 1}) == 1);
  CHECK(quadric_value(gamma_map(q5(1, 1, 2, 3, 4))) == 0);
}

TEST_CASE("the image of gamma lies on the quadric identically") {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < 5; ++i) v.push_back(Polynomial::variable(5, i));
  const AffinePoint5<Polynomial> generic{v[0], v[1], v[2], v[3], v[4]};
  const Polynomial q = quadric_value(gamma_map(generic));
  CHECK(q.is_zero());
  // but the quadric itself is not identically zero
  std::vector<Polynomial> p;
  for (std::size_t i = 0; i < 6; ++i) p.push_back(Polynomial::variable(6, i));
  CHECK_FALSE(quadric_value(PlueckerPoint<Polynomial>{p[0], p[1], p[2], p[3], p[4], p[5]}).is_zero());
}

TEST_CASE("indeterminacy locus") {
  CHECK(is_indeterminate(q5(0, 1, 0, 0, 0)));
  CHECK_FALSE(is_indeterminate(q5(1, 0, 0, 0, 0)));
  CHECK(is_indeterminate(q5(0, 1, 2, 3, 6)));
  CHECK_FALSE(is_indeterminate(q5(0, 1, 0, 0, 1)));
  CHECK_THROWS_AS(is_indeterminate(q5(0, 0, 0, 0, 0)), DomainError);
}

TEST_CASE("indeterminacy matches alpha = xw - yz = 0 over F_32003") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> small(0, 3);
  std::uniform_int_distribution<std::int64_t> any(0, kField - 1);
  int hits = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    // Small coordinates make the locus hit often enough to matter.
    auto pick = [&] { return trial % 2 ? fp(small(rng)) : fp(any(rng)); };
    AffinePoint5<ModP> pt{trial % 3 ? fp(0) : pick(), pick(), pick(), pick(), pick()};
    if (is_zero(pt.alpha) && is_zero(pt.x) && is_zero(pt.y) && is_zero(pt.z) && is_zero(pt.w)) continue;
    const bool expected = is_zero(pt.alpha) && is_zero(pt.x * pt.w - pt.y * pt.z);
    CHECK(is_indeterminate(pt) == expected);
    hits += expected;
    CHECK(is_zero(quadric_value(gamma_map(pt))));
  }
  CHECK(hits > 0);
}

TEST_CASE("determinantal locus") {
  using P = DeterminantalPoint<Rational>;
  CHECK(determinantal_membership(P{0, 0, 0, 0, 0, 0, 0, 0}));
  CHECK_FALSE(determinantal_membership(P{1, 0, 0, 0, 0, 1, 0, 0}));

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> any(0, kField - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const ModP x = fp(any(rng)), y = fp(any(rng)), z = fp(any(rng)), w = fp(any(rng));
    const ModP lambda = fp(any(rng));
    // second row [-v t u -s] = lambda * [x y z w]
    const DeterminantalPoint<ModP> rank_one{x, y, z, w, -(lambda * w), lambda * y, lambda * z, -(lambda * x)};
    CHECK(determinantal_membership(rank_one));

    const ModP mu = fp(any(rng) | 1);
    DeterminantalPoint<ModP> scaled = rank_one;
    scaled.x = mu * scaled.x;
    scaled.y = mu * scaled.y;
    scaled.z = mu * scaled.z;
    scaled.w = mu * scaled.w;
    CHECK(determinantal_membership(scaled));

    const DeterminantalPoint<ModP> generic{x, y, z, w, fp(any(rng)), fp(any(rng)), fp(any(rng)), fp(any(rng))};
    DeterminantalPoint<ModP> generic_scaled = generic;
    generic_scaled.s = mu * generic.s;
    generic_scaled.t = mu * generic.t;
    generic_scaled.u = mu * generic.u;
    generic_scaled.v = mu * generic.v;
    CHECK(determinantal_membership(generic) == determinantal_membership(generic_scaled));
  }
}

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime(kField));
  CHECK_FALSE(is_prime(32001));
  CHECK((fp(32002) + fp(5)).value() == 4);
  CHECK((fp(3) - fp(5)).value() == kField - 2);
  CHECK((fp(-1) * fp(-1)).value() == 1);
  CHECK_THROWS_AS(fp(1) + ModP(1, 7), DomainError);
}

TEST_CASE("Springer fibres") {
  auto f = springer_fiber(2, 4, 2);
  CHECK(f.t == 0);
  CHECK(f.h == 0);
  CHECK(f.dimension == 0);
  f = springer_fiber(2, 5, 0);
  CHECK(f.t == 2);
  CHECK(f.h == 5);
  CHECK(f.dimension == 6);
  f = springer_fiber(2, 4, 1);
  CHECK(f.t == 1);
  CHECK(f.h == 2);
  CHECK(f.dimension == 1);
  CHECK_THROWS_AS(springer_fiber(3, 5, 1), DomainError);
  CHECK_THROWS_AS(springer_fiber(2, 4, 3), DomainError);
  CHECK_THROWS_AS(springer_fiber(2, 4, -1), DomainError);
}
