#include "flopk/counterex.hpp"

#include "flopk/errors.hpp"

namespace flopk {

namespace {

BoxShape projective_box(int h) {
  if (h < 2) throw DomainError("projective space needs h >= 2");
  return BoxShape(1, h - 1);
}

}  // namespace

IntegerMatrix line_basis_change(int h) {
  const BoxShape box = projective_box(h);
  const std::size_t n = static_cast<std::size_t>(h);
  IntegerMatrix change(n, n);
  for (std::size_t j = 0; j < n; ++j)
    change.set_column(j, line_bundle_class(1 - static_cast<int>(j), box).coords());
  return change;
}

std::vector<Integer> to_line_basis(const KVector& v) {
  if (v.box().rows != 1) throw DomainError("line basis exists only for projective spaces");
  const int h = v.box().h();
  const auto inv = inverse(to_rational(line_basis_change(h)));
  if (!inv) throw std::logic_error("line basis change is singular");
  std::vector<Rational> canonical(v.coords().begin(), v.coords().end());
  std::vector<Integer> out;
  for (const auto& x : *inv * canonical) {
    if (!is_integral(x)) throw NonIntegralExpansion("line-basis coordinate " + to_string(x));
    out.push_back(boost::multiprecision::numerator(x));
  }
  return out;
}

KVector from_line_basis(int h, const std::vector<Integer>& coords) {
  return KVector(projective_box(h), line_basis_change(h) * coords);
}

KVector koszul_term(int h, int i) {
  const BoxShape box = projective_box(h);
  return expand_in_basis(TautExpr::wedge(i, BaseBundle::Tangent) * TautExpr::line(-1), box);
}

KVector koszul_ideal_class(int h) {
  const BoxShape box = projective_box(h);
  // 0 -> wedge^{n} -> ... -> wedge^1 -> I -> 0 with n = dim P^{h-1}.
  KVector total(box);
  for (int i = 1; i <= h - 1; ++i) {
    const KVector term = koszul_term(h, i);
    if (i % 2 == 1) total += term; else total -= term;
  }
  return total;
}

IntegerMatrix psi_prime_matrix_canonical() {
  const BoxShape box = projective_box(3);
  // Domain generators [O+(-1)], [O+], [O+(1)] in the canonical basis of G+.
  IntegerMatrix domain(3, 3);
  for (int j = 0; j < 3; ++j)
    domain.set_column(static_cast<std::size_t>(j), line_bundle_class(j - 1, box).coords());
  const auto domain_inv = inverse(to_rational(domain));
  if (!domain_inv) throw std::logic_error("domain basis change is singular");

  IntegerMatrix images(3, 3);
  images.set_column(0, line_bundle_class(1, box).coords());
  images.set_column(1, line_bundle_class(0, box).coords());
  images.set_column(2, koszul_ideal_class(3).coords());

  const RationalMatrix product = to_rational(images) * *domain_inv;
  IntegerMatrix out(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      if (!is_integral(product(r, c))) throw NonIntegralExpansion("canonical flop entry " + to_string(product(r, c)));
      out(r, c) = boost::multiprecision::numerator(product(r, c));
    }
  return out;
}

IntegerMatrix psi_prime_matrix() {
  const BoxShape box = projective_box(3);
  IntegerMatrix m(3, 3);
  m.set_column(0, to_line_basis(line_bundle_class(1, box)));
  m.set_column(1, to_line_basis(line_bundle_class(0, box)));
  m.set_column(2, to_line_basis(koszul_ideal_class(3)));
  return m;
}

std::optional<Integer> image_index(const IntegerMatrix& m) {
  if (!m.square()) throw DomainError("image_index needs a square matrix");
  Integer index = 1;
  for (const auto& d : smith_normal_form(m)) {
    if (d == 0) return std::nullopt;
    index *= d;
  }
  return index;
}

}  // namespace flopk
