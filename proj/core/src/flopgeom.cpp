#include "flopk/flopgeom.hpp"

#include <sstream>

namespace flopk {

namespace {

void require_same_field(const ModP& a, const ModP& b) {
  if (a.modulus() != b.modulus()) throw DomainError("prime field elements with different moduli");
}

}  // namespace

ModP::ModP(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw DomainError("field modulus must be at least 2");
  const auto m = static_cast<std::int64_t>(modulus);
  value_ = static_cast<std::uint64_t>(((value % m) + m) % m);
}

ModP operator+(const ModP& a, const ModP& b) {
  require_same_field(a, b);
  return ModP(static_cast<std::int64_t>((a.value_ + b.value_) % a.modulus_), a.modulus_);
}

ModP operator-(const ModP& a, const ModP& b) {
  require_same_field(a, b);
  return ModP(static_cast<std::int64_t>((a.value_ + a.modulus_ - b.value_) % a.modulus_), a.modulus_);
}

ModP operator*(const ModP& a, const ModP& b) {
  require_same_field(a, b);
  const auto product = static_cast<unsigned __int128>(a.value_) * b.value_ % a.modulus_;
  return ModP(static_cast<std::int64_t>(product), a.modulus_);
}

ModP operator-(const ModP& a) {
  return ModP(static_cast<std::int64_t>((a.modulus_ - a.value_) % a.modulus_), a.modulus_);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw DomainError("variable index out of range");
  Polynomial p(variables);
  Monomial m(variables, 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), 1);
  return p;
}

Polynomial Polynomial::constant(std::size_t variables, const Integer& c) {
  Polynomial p(variables);
  p.add_term(Monomial(variables, 0), c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_) throw DomainError("polynomial ring mismatch");
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out(a.variables_);
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_) throw DomainError("polynomial ring mismatch");
  Polynomial out(a.variables_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m(a.variables_);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const Integer magnitude = abs(c);
    bool constant = true;
    for (int e : m)
      if (e) constant = false;
    if (magnitude != 1 || constant) out << magnitude;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (m[i] > 1) out << '^' << m[i];
    }
  }
  return out.str();
}

SpringerFiber springer_fiber(int t, int h, int i) {
  if (i < 0 || i > t || 2 * t > h || t < 0)
    throw DomainError("springer fibre needs 0 <= i <= t <= h/2, got t=" + std::to_string(t) +
                      " h=" + std::to_string(h) + " i=" + std::to_string(i));
  const int ft = t - i;
  const int fh = h - 2 * i;
  return {ft, fh, ft * (fh - ft)};
}

}  // namespace flopk
