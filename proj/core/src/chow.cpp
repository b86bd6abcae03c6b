#include "flopk/chow.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "flopk/errors.hpp"

namespace flopk {

namespace {

std::map<Partition, std::size_t> index_map(const std::vector<Partition>& basis) {
  std::map<Partition, std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i], i);
  return out;
}

void require_same_box(const SchubertVector& a, const SchubertVector& b) {
  if (a.box() != b.box()) throw BoxMismatch("Schubert classes live on different Grassmannians");
}

}  // namespace

ChowRing::ChowRing(const BoxShape& box) : box_(box), basis_(enumerate_box(box)) {
  const std::size_t n = basis_.size();
  const auto index = index_map(basis_);
  products_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (basis_[i].size() + basis_[j].size() > box_.dimension()) continue;
      std::vector<Term> terms;
      for (const auto& [nu, c] : lr_coefficients(basis_[i], basis_[j], box_))
        terms.push_back({index.at(nu), c});
      products_[i * n + j] = terms;
      products_[j * n + i] = std::move(terms);
    }
  }
}

std::shared_ptr<const ChowRing> ChowRing::of(const BoxShape& box) {
  static std::mutex mutex;
  static std::map<BoxShape, std::shared_ptr<const ChowRing>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(box);
  if (it == cache.end()) it = cache.emplace(box, std::make_shared<const ChowRing>(box)).first;
  return it->second;
}

std::size_t ChowRing::index_of(const Partition& p) const {
  if (!box_.fits(p))
    throw DomainError("partition " + to_string(p) + " does not fit in the " +
                      std::to_string(box_.rows) + "x" + std::to_string(box_.cols) + " box");
  // Grades are contiguous; search only within the grade.
  const auto lo = std::lower_bound(basis_.begin(), basis_.end(), p.size(),
                                   [](const Partition& q, int n) { return q.size() < n; });
  for (auto it = lo; it != basis_.end() && it->size() == p.size(); ++it)
    if (*it == p) return static_cast<std::size_t>(it - basis_.begin());
  throw DomainError("partition " + to_string(p) + " missing from basis");
}

SchubertVector::SchubertVector(const BoxShape& box)
    : ring_(ChowRing::of(box)), coeffs_(ring_->rank()) {}

SchubertVector SchubertVector::unit(const BoxShape& box) {
  return schubert(box, Partition{});
}

SchubertVector SchubertVector::schubert(const BoxShape& box, const Partition& p,
                                        const Rational& coefficient) {
  SchubertVector v(box);
  v.coeffs_[v.ring_->index_of(p)] = coefficient;
  return v;
}

Rational SchubertVector::coefficient(const Partition& p) const {
  if (!box().fits(p)) return 0;
  return coeffs_[ring_->index_of(p)];
}

std::vector<std::pair<Partition, Rational>> SchubertVector::terms() const {
  std::vector<std::pair<Partition, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(ring_->basis()[i], coeffs_[i]);
  return out;
}

bool SchubertVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

SchubertVector SchubertVector::graded_part(int d) const {
  SchubertVector out(box());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (ring_->degree(i) == d) out.coeffs_[i] = coeffs_[i];
  return out;
}

SchubertVector& SchubertVector::operator+=(const SchubertVector& other) {
  require_same_box(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SchubertVector& SchubertVector::operator-=(const SchubertVector& other) {
  require_same_box(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SchubertVector& SchubertVector::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool operator==(const SchubertVector& a, const SchubertVector& b) {
  return a.box() == b.box() && a.coeffs_ == b.coeffs_;
}

SchubertVector operator*(const SchubertVector& a, const SchubertVector& b) {
  require_same_box(a, b);
  const ChowRing& ring = a.ring();
  SchubertVector out(a.box());
  const std::size_t n = ring.rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      const auto& terms = ring.product(i, j);
      if (terms.empty()) continue;
      const Rational ab = a.coeffs_[i] * b.coeffs_[j];
      for (const auto& term : terms) out.coeffs_[term.index] += ab * term.coefficient;
    }
  }
  return out;
}

SchubertVector schubert_multiply(const SchubertVector& a, const SchubertVector& b) { return a * b; }

SchubertVector power(const SchubertVector& x, int exponent) {
  if (exponent < 0) throw DomainError("negative power of a Schubert class");
  SchubertVector out = SchubertVector::unit(x.box());
  for (int i = 0; i < exponent; ++i) out = out * x;
  return out;
}

SchubertVector exp_series(const SchubertVector& x) {
  if (x.coefficient(Partition{}) != 0)
    throw DomainError("exp_series needs a class without constant term");
  SchubertVector out = SchubertVector::unit(x.box());
  SchubertVector term = out;
  for (int k = 1; k <= x.box().dimension(); ++k) {
    term = term * x;
    term *= Rational(1, k);
    out += term;
  }
  return out;
}

SchubertVector adams(const SchubertVector& ch, int k) {
  SchubertVector out = ch;
  const ChowRing& ring = ch.ring();
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    Integer scale = 1;
    for (int d = 0; d < ring.degree(i); ++d) scale *= k;
    out.dense()[i] *= Rational(scale);
  }
  return out;
}

std::vector<SchubertVector> chern_classes_quotient(const BoxShape& box) {
  std::vector<SchubertVector> out;
  for (int i = 0; i <= box.cols; ++i)
    out.push_back(SchubertVector::schubert(box, i == 0 ? Partition{} : Partition{i}));
  return out;
}

std::vector<SchubertVector> chern_classes_tau(const BoxShape& box) {
  const auto cq = chern_classes_quotient(box);
  // c(tau) = c(q)^{-1}, degree by degree: c_k(tau) = -sum_{i>=1} c_i(q) c_{k-i}(tau).
  std::vector<SchubertVector> out{SchubertVector::unit(box)};
  for (int k = 1; k <= box.rows; ++k) {
    SchubertVector ck(box);
    for (int i = 1; i <= std::min(k, box.cols); ++i)
      ck -= cq[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
    out.push_back(std::move(ck));
  }
  return out;
}

SchubertVector character_from_chern(int rank, const std::vector<SchubertVector>& chern) {
  if (chern.empty()) throw DomainError("character_from_chern needs c_0");
  const BoxShape box = chern.front().box();
  const int top = box.dimension();
  auto e = [&](int k) {
    return k < static_cast<int>(chern.size()) ? chern[static_cast<std::size_t>(k)]
                                              : SchubertVector(box);
  };
  // Newton: p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k.
  std::vector<SchubertVector> p{SchubertVector::unit(box) * Rational(rank)};
  for (int k = 1; k <= top; ++k) {
    SchubertVector pk = e(k) * Rational(k % 2 == 1 ? k : -k);
    for (int i = 1; i < k; ++i) {
      const SchubertVector term = e(i) * p[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1) pk += term; else pk -= term;
    }
    p.push_back(std::move(pk));
  }
  SchubertVector ch = p[0];
  for (int k = 1; k <= top; ++k)
    ch += p[static_cast<std::size_t>(k)] * Rational(1, factorial(k));
  return ch;
}

Integer sn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw DomainError("character arguments must have equal size");
  // Beta-set form: rim hooks of length r are bead moves b -> b - r.
  const int length = lambda.rows();
  std::vector<int> beads(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i)
    beads[static_cast<std::size_t>(i)] = lambda.part(i) + (length - 1 - i);

  std::function<Integer(std::vector<int>&, int)> rec = [&](std::vector<int>& set, int next) -> Integer {
    if (next == rho.rows()) return 1;
    const int r = rho.part(next);
    Integer total = 0;
    for (std::size_t k = 0; k < set.size(); ++k) {
      const int b = set[k];
      const int target = b - r;
      if (target < 0) continue;
      if (std::find(set.begin(), set.end(), target) != set.end()) continue;
      int between = 0;
      for (int c : set)
        if (c > target && c < b) ++between;
      set[k] = target;
      const Integer sub = rec(set, next + 1);
      set[k] = b;
      total += between % 2 == 0 ? sub : Integer(-sub);
    }
    return total;
  };
  return rec(beads, 0);
}

Integer centralizer_size(const Partition& rho) {
  Integer z = 1;
  int i = 0;
  while (i < rho.rows()) {
    const int part = rho.part(i);
    int multiplicity = 0;
    while (i < rho.rows() && rho.part(i) == part) {
      ++multiplicity;
      ++i;
    }
    for (int m = 0; m < multiplicity; ++m) z *= part;
    z *= factorial(multiplicity);
  }
  return z;
}

SchubertVector schur_functor(const SchubertVector& ch, const Partition& alpha) {
  const BoxShape box = ch.box();
  const int n = alpha.size();
  if (n == 0) return SchubertVector::unit(box);

  std::vector<SchubertVector> psi;
  psi.reserve(static_cast<std::size_t>(n) + 1);
  psi.emplace_back(box);
  for (int k = 1; k <= n; ++k) psi.push_back(adams(ch, k));

  // s_alpha = sum_rho chi^alpha(rho) / z_rho * p_rho, with a running product
  // over the parts of rho (largest first) shared between siblings.
  SchubertVector out(box);
  std::vector<int> parts;
  std::function<void(int, int, const SchubertVector&)> rec =
      [&](int remaining, int cap, const SchubertVector& product) {
        if (remaining == 0) {
          const Partition rho(parts);
          const Integer chi = sn_character(alpha, rho);
          if (chi != 0) out += product * Rational(chi, centralizer_size(rho));
          return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
          parts.push_back(part);
          rec(remaining - part, part, product * psi[static_cast<std::size_t>(part)]);
          parts.pop_back();
        }
      };
  rec(n, n, SchubertVector::unit(box));
  return out;
}

SchubertVector ch_tau(const BoxShape& box) {
  return character_from_chern(box.rows, chern_classes_tau(box));
}

SchubertVector ch_quotient(const BoxShape& box) {
  return character_from_chern(box.cols, chern_classes_quotient(box));
}

SchubertVector chern_character(const Partition& alpha, const BoxShape& box) {
  if (!box.fits(alpha))
    throw DomainError("partition " + to_string(alpha) + " does not fit in the box");
  return schur_functor(ch_tau(box), alpha);
}

RationalMatrix ch_matrix(const BoxShape& box) {
  const auto ring = ChowRing::of(box);
  const std::size_t n = ring->rank();
  const SchubertVector tau = ch_tau(box);
  RationalMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, schur_functor(tau, ring->basis()[j]).dense());
  return m;
}

}  // namespace flopk
