#include "flopk_acceptance/criteria.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "flopk/flopk.hpp"
#include "flopk_oracles/oracles.hpp"

namespace flopk::acceptance {

namespace {

// Failure collector for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << (total_ - failed_) << "/" << total_ << " checks";
    for (const auto& f : failures_) out << "; FAILED: " << f;
    return out.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

std::string join(const std::vector<Integer>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

// Portable draws: plain modulo on the 64-bit engine output.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

const std::vector<std::pair<int, int>> kFlopCases{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 6}};

Check basis_ranks() {
  Check c;
  for (int h = 1; h <= 8; ++h)
    for (int t = 1; 2 * t <= h; ++t) {
      const auto basis = enumerate_box(BoxShape::grassmannian(t, h));
      c.expect(Integer(basis.size()) == binomial(h, t),
               "rank of K(G(" + std::to_string(t) + "," + std::to_string(h) + "))");
    }
  return c;
}

Check flop_isomorphism() {
  Check c;
  for (const auto& [t, h] : kFlopCases) {
    const Integer det = determinant(flop_matrix(BoxShape::grassmannian(t, h)));
    c.expect(det == 1 || det == -1,
             "det flop(" + std::to_string(t) + "," + std::to_string(h) + ") = " + det.str());
  }
  return c;
}

Check involution() {
  Check c;
  for (const auto& [t, h] : kFlopCases) {
    const auto m = flop_matrix(BoxShape::grassmannian(t, h));
    c.expect(m * m == IntegerMatrix::identity(m.rows()),
             "flop(" + std::to_string(t) + "," + std::to_string(h) + ")^2 = 1");
  }
  return c;
}

Check main_component() {
  Check c;
  const auto m = psi_prime_matrix();
  c.expect(m.column(0) == std::vector<Integer>{1, 0, 0}, "column [O(1)] = " + join(m.column(0)));
  c.expect(m.column(1) == std::vector<Integer>{0, 1, 0}, "column [O] = " + join(m.column(1)));
  c.expect(m.column(2) == std::vector<Integer>{-3, 6, -2}, "column [O(-1) (x) I] = " + join(m.column(2)));
  const auto snf = smith_normal_form(m);
  c.expect(snf == std::vector<Integer>{1, 1, 2}, "SNF = " + join(snf));
  const auto index = image_index(m);
  c.expect(index && *index == 2, "image index = 2");
  const auto canonical = image_index(psi_prime_matrix_canonical());
  c.expect(canonical && *canonical == 2, "image index in the canonical basis = 2");
  return c;
}

Check koszul_terms() {
  Check c;
  const auto first = to_line_basis(koszul_term(3, 1));
  c.expect(first == std::vector<Integer>{0, 3, -1}, "[Theta (x) O(-1)] = " + join(first));
  const auto second = to_line_basis(koszul_term(3, 2));
  c.expect(second == std::vector<Integer>{3, -3, 1}, "[wedge^2 Theta (x) O(-1)] = " + join(second));
  return c;
}

Check bott_anchors() {
  Check c;
  const BoxShape g24(2, 2);
  c.expect(!bott_cohomology(line_bundle_weight(-2, g24)).has_value(), "H^*(G(2,4), O(-2)) = 0");
  const auto table = hodge_numbers(g24);
  c.expect(table[2][2] == 2, "h^{2,2}(G(2,4)) = 2");
  c.expect(table[3][3] == 1, "h^{3,3}(G(2,4)) = 1");
  const std::vector<Integer> diagonal{1, 1, 2, 1, 1};
  for (std::size_t p = 0; p < table.size(); ++p)
    for (std::size_t q = 0; q < table.size(); ++q)
      c.expect(table[p][q] == (p == q ? diagonal[p] : Integer(0)),
               "h^{" + std::to_string(p) + "," + std::to_string(q) + "}(G(2,4))");
  for (int d = 0; d <= 5; ++d) {
    const auto h = bott_cohomology(line_bundle_weight(d, BoxShape(1, 2)));
    c.expect(h && h->degree == 0 && h->dimension == (d + 1) * (d + 2) / 2,
             "h^0(P^2, O(" + std::to_string(d) + "))");
  }
  return c;
}

Check pluecker_identity(std::uint64_t seed) {
  Check c;
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < 5; ++i) v.push_back(Polynomial::variable(5, i));
  const AffinePoint5<Polynomial> generic{v[0], v[1], v[2], v[3], v[4]};
  const Polynomial q = quadric_value(gamma_map(generic));
  c.expect(q.is_zero(), "symbolic quadric(gamma) = " + to_string(q, {"a", "x", "y", "z", "w"}));

  constexpr std::uint64_t field = 32003;
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    auto draw = [&] { return ModP(rng.uniform(0, field - 1), field); };
    const AffinePoint5<ModP> pt{draw(), draw(), draw(), draw(), draw()};
    c.expect(is_zero(quadric_value(gamma_map(pt))), "random point " + std::to_string(i));
  }
  return c;
}

Check weyl_words(std::uint64_t seed) {
  Check c;
  for (int h = 2; h <= 8; ++h) {
    const Word word = duality_word(h);
    c.expect(word_product(h, word) == duality_sigma(h).inverse(), "duality word product, h=" + std::to_string(h));
    c.expect(static_cast<int>(word.size()) == 2 * h - 3, "duality word length, h=" + std::to_string(h));
  }
  Rng rng(seed ^ 0x5eedULL);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform(0, 7));
    std::vector<Rational> vec;
    while (static_cast<int>(vec.size()) < n) {
      const Rational x(rng.uniform(-100, 100), rng.uniform(1, 9));
      if (std::find(vec.begin(), vec.end(), x) == vec.end()) vec.push_back(x);
    }
    const auto sorted = chamber_sort(vec);
    const auto moved = apply_word(sorted.word, vec);
    bool strictly_decreasing = true;
    for (std::size_t i = 0; i + 1 < moved.size(); ++i)
      if (!(moved[i] > moved[i + 1])) strictly_decreasing = false;
    c.expect(strictly_decreasing, "chamber sort trial " + std::to_string(trial));
    c.expect(static_cast<int>(sorted.word.size()) == oracle::bubble_sort_swaps(vec),
             "chamber word reduced, trial " + std::to_string(trial));
  }
  return c;
}

Check oracle_equivalences() {
  Check c;
  for (int total = 0; total <= 8; ++total)
    for (int a = 0; a <= total; ++a)
      for (const auto& lambda : partitions_of(a))
        for (const auto& mu : partitions_of(total - a))
          c.expect(lr_coefficients(lambda, mu) == oracle::lr_by_schur_polynomials(lambda, mu),
                   "LR " + to_string(lambda) + " * " + to_string(mu));
  const BoxShape box(2, 3);
  for (const auto& alpha : enumerate_box(box))
    c.expect(expand_in_basis(TautExpr::schur(alpha), box) == KVector::basis_vector(box, alpha),
             "round trip " + to_string(alpha));
  return c;
}

Check serre_duality(std::uint64_t seed) {
  Check c;
  const BoxShape g24(2, 2);
  Rng rng(seed ^ 0xb077ULL);
  int nonzero = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Weight w;
    for (int i = 0; i < 2; ++i) w.a.push_back(static_cast<int>(rng.uniform(-6, 6)));
    for (int i = 0; i < 2; ++i) w.b.push_back(static_cast<int>(rng.uniform(-6, 6)));
    std::sort(w.a.rbegin(), w.a.rend());
    std::sort(w.b.rbegin(), w.b.rend());
    const auto h = bott_cohomology(w);
    const auto d = bott_cohomology(serre_dual(w));
    const bool ok = h.has_value() == d.has_value() &&
                    (!h || (h->degree + d->degree == g24.dimension() && h->dimension == d->dimension));
    nonzero += h.has_value();
    c.expect(ok, "Serre duality for weight " + to_string(w));
  }
  c.expect(nonzero > 0, "sample contains non-vanishing bundles");
  return c;
}

}  // namespace

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  struct Spec {
    int id;
    std::string title;
    double budget;
    std::function<Check()> body;
  };
  const std::vector<Spec> specs{
      {1, "basis ranks |box(t,h-t)| = C(h,t), h <= 8", 1.0, basis_ranks},
      {2, "flop matrices have det +-1", 30.0, flop_isomorphism},
      {3, "flop matrices square to the identity", 0.0, involution},
      {4, "main-component map: columns, SNF (1,1,2), index 2", 1.0, main_component},
      {5, "intermediate Koszul classes", 0.0, koszul_terms},
      {6, "Bott anchors and Hodge diagonal of G(2,4)", 5.0, bott_anchors},
      {7, "Pluecker quadric vanishes on the gamma map", 1.0, [seed] { return pluecker_identity(seed); }},
      {8, "Weyl words and chamber sorting", 1.0, [seed] { return weyl_words(seed); }},
      {9, "LR and basis round-trip oracles; no NonIntegralExpansion", 0.0, oracle_equivalences},
      {10, "Serre duality on random weights of G(2,4)", 0.0, [seed] { return serre_duality(seed); }},
  };

  std::vector<CriterionResult> results;
  bool non_integral_seen = false;
  for (const auto& spec : specs) {
    CriterionResult r{spec.id, spec.title, false, "", 0.0, spec.budget};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Check check = spec.body();
      r.passed = check.ok();
      r.detail = check.summary();
    } catch (const NonIntegralExpansion& e) {
      non_integral_seen = true;
      r.detail = std::string("NonIntegralExpansion: ") + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
      r.passed = false;
      r.detail += "; over time budget";
    }
    results.push_back(std::move(r));
  }
  for (auto& r : results)
    if (r.id == 9 && non_integral_seen) {
      r.passed = false;
      r.detail += "; NonIntegralExpansion raised elsewhere in the suite";
    }
  return results;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << "  " << r.title << "  ("
      << std::fixed << std::setprecision(3) << r.seconds << " s";
  if (r.budget_seconds > 0) out << " / " << std::setprecision(0) << r.budget_seconds << " s budget";
  out << ")  " << r.detail;
  return out.str();
}

}  // namespace flopk::acceptance
