#include "flopk/kgroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "flopk/errors.hpp"
#include "json.hpp"

namespace flopk {

namespace {

// Per-box characters and the inverse Chern-character matrix.
struct KContext {
  std::shared_ptr<const ChowRing> ring;
  SchubertVector tau;
  SchubertVector quotient;
  SchubertVector tangent;
  RationalMatrix ch_inverse;

  explicit KContext(const BoxShape& box)
      : ring(ChowRing::of(box)),
        tau(ch_tau(box)),
        quotient(ch_quotient(box)),
        tangent(dual_character(tau) * quotient) {
    auto inv = inverse(ch_matrix(box));
    if (!inv) throw std::logic_error("Chern character matrix is singular");
    ch_inverse = std::move(*inv);
  }
};

const KContext& context(const BoxShape& box) {
  static std::mutex mutex;
  static std::map<BoxShape, std::unique_ptr<KContext>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(box);
  if (it == cache.end()) it = cache.emplace(box, std::make_unique<KContext>(box)).first;
  return *it->second;
}

void require_same_box(const KVector& a, const KVector& b) {
  if (a.box() != b.box()) throw BoxMismatch("K-classes live on different Grassmannians");
}

SchubertVector factor_character(const Factor& factor, const KContext& ctx) {
  if (const auto* line = std::get_if<LineBundle>(&factor)) {
    const int t = ctx.ring->box().rows;
    // O(-1) = wedge^t tau, O(1) its dual.
    SchubertVector det = exterior_power(ctx.tau, t);
    if (line->twist > 0) det = dual_character(det);
    return power(det, std::abs(line->twist));
  }
  const auto& schur = std::get<SchurFactor>(factor);
  const SchubertVector* base = nullptr;
  switch (schur.base) {
    case BaseBundle::Tau: base = &ctx.tau; break;
    case BaseBundle::Quotient: base = &ctx.quotient; break;
    case BaseBundle::Tangent: base = &ctx.tangent; break;
  }
  const SchubertVector ch = schur_functor(*base, schur.shape);
  return schur.dual ? dual_character(ch) : ch;
}

}  // namespace

KVector::KVector(const BoxShape& box) : box_(box), coords_(ChowRing::of(box)->rank()) {}

KVector::KVector(const BoxShape& box, std::vector<Integer> coords)
    : box_(box), coords_(std::move(coords)) {
  if (coords_.size() != ChowRing::of(box)->rank())
    throw DomainError("K-vector length does not match the basis rank");
}

KVector KVector::basis_vector(const BoxShape& box, const Partition& alpha) {
  KVector v(box);
  v.coords_[ChowRing::of(box)->index_of(alpha)] = 1;
  return v;
}

const Integer& KVector::at(const Partition& alpha) const {
  return coords_[ChowRing::of(box_)->index_of(alpha)];
}

KVector& KVector::operator+=(const KVector& other) {
  require_same_box(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

KVector& KVector::operator-=(const KVector& other) {
  require_same_box(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

KVector& KVector::operator*=(const Integer& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

std::string to_string(const KVector& v) {
  const auto& basis = ChowRing::of(v.box())->basis();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) out << (v[i] < 0 ? " - " : " + ");
    else if (v[i] < 0) out << "-";
    out << abs(v[i]) << "[" << to_string(basis[i]) << "]";
    first = false;
  }
  return first ? "0" : out.str();
}

TautExpr& TautExpr::operator+=(const TautExpr& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

TautExpr& TautExpr::operator-=(const TautExpr& other) {
  for (auto term : other.terms_) {
    term.coefficient = -term.coefficient;
    terms_.push_back(std::move(term));
  }
  return *this;
}

TautExpr& TautExpr::operator*=(const Integer& scalar) {
  for (auto& term : terms_) term.coefficient *= scalar;
  return *this;
}

TautExpr operator*(const TautExpr& a, const TautExpr& b) {
  TautExpr out;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      ExprTerm term{x.coefficient * y.coefficient, x.factors};
      term.factors.insert(term.factors.end(), y.factors.begin(), y.factors.end());
      out.terms_.push_back(std::move(term));
    }
  return out;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
  }

  TautExpr parse() {
    if (src_.empty()) fail("empty expression");
    TautExpr out;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    while (true) {
      TautExpr term = parse_term();
      if (negative) out -= term; else out += term;
      if (done()) break;
      const char sign = get();
      if (sign != '+' && sign != '-') fail("expected + or -");
      negative = sign == '-';
    }
    return out;
  }

 private:
  bool done() const { return pos_ >= src_.size(); }
  char peek() const { return done() ? '\0' : src_[pos_]; }
  char get() {
    if (done()) fail("unexpected end of expression");
    return src_[pos_++];
  }
  void expect(char c) {
    if (get() != c) fail(std::string("expected '") + c + "'");
  }
  bool accept(const std::string& word) {
    if (src_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("bad class expression '" + src_ + "' at " + std::to_string(pos_) + ": " + why);
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
    return out;
  }

  int signed_int() {
    std::string text;
    if (peek() == '-' || peek() == '+') text.push_back(get());
    const std::string d = digits();
    if (d.empty()) fail("expected an integer");
    return std::stoi(text + d);
  }

  TautExpr parse_term() {
    Integer coefficient = 1;
    const std::string d = digits();
    if (!d.empty()) {
      coefficient = Integer(d);
      if (peek() != '*') return coefficient * TautExpr::structure_sheaf();
      get();
    }
    TautExpr term = parse_factor();
    while (peek() == '*') {
      get();
      term = term * parse_factor();
    }
    return coefficient * term;
  }

  TautExpr parse_factor() {
    if (accept("O")) {
      if (peek() != '(') return TautExpr::structure_sheaf();
      get();
      const int k = signed_int();
      expect(')');
      return TautExpr::line(k);
    }
    const char functor = get();
    if (functor != 'S' && functor != 'L') fail("expected O, S[...] or L[...]");
    expect('[');
    std::string inside;
    while (peek() != ']') inside.push_back(get());
    expect(']');
    Partition shape;
    if (functor == 'S') {
      shape = parse_partition(inside);
    } else {
      if (inside.empty() || !std::all_of(inside.begin(), inside.end(),
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail("L[i] needs a non-negative integer");
      shape = column(std::stoi(inside));
    }
    expect('(');
    BaseBundle base;
    if (accept("tau")) base = BaseBundle::Tau;
    else if (accept("Theta")) base = BaseBundle::Tangent;
    else if (accept("q")) base = BaseBundle::Quotient;
    else fail("expected tau, q or Theta");
    bool dual = false;
    if (peek() == '*') {
      get();
      dual = true;
    }
    expect(')');
    return TautExpr::schur(shape, base, dual);
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

TautExpr parse_expression(const std::string& text) { return ExprParser(text).parse(); }

SchubertVector character(const TautExpr& expr, const BoxShape& box) {
  const KContext& ctx = context(box);
  SchubertVector total(box);
  for (const auto& term : expr.terms()) {
    SchubertVector product = SchubertVector::unit(box);
    for (const auto& factor : term.factors) product = product * factor_character(factor, ctx);
    total += product * Rational(term.coefficient);
  }
  return total;
}

KVector expand_character(const SchubertVector& ch) {
  const BoxShape box = ch.box();
  const KContext& ctx = context(box);
  const std::vector<Rational> solution = ctx.ch_inverse * ch.dense();
  std::vector<Integer> coords;
  coords.reserve(solution.size());
  for (std::size_t i = 0; i < solution.size(); ++i) {
    if (!is_integral(solution[i]))
      throw NonIntegralExpansion("coordinate at [" + to_string(ctx.ring->basis()[i]) +
                                 "] is " + to_string(solution[i]));
    coords.push_back(boost::multiprecision::numerator(solution[i]));
  }
  return KVector(box, std::move(coords));
}

KVector expand_in_basis(const TautExpr& expr, const BoxShape& box) {
  return expand_character(character(expr, box));
}

KVector line_bundle_class(int k, const BoxShape& box) {
  return expand_in_basis(TautExpr::line(k), box);
}

KVector dual_class(const Partition& alpha, const BoxShape& box) {
  if (!box.fits(alpha)) throw DomainError("partition " + to_string(alpha) + " does not fit in the box");
  return expand_in_basis(TautExpr::schur(alpha, BaseBundle::Tau, true), box);
}

IntegerMatrix flop_matrix(const BoxShape& box) {
  const auto& basis = ChowRing::of(box)->basis();
  IntegerMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) m.set_column(j, dual_class(basis[j], box).coords());
  return m;
}

TwistReport twist_relation(const BoxShape& box) {
  const auto& basis = ChowRing::of(box)->basis();
  // Classes [Sigma^beta tau (x) O(c)] for every beta in the box and twist c.
  std::vector<std::vector<KVector>> twisted(static_cast<std::size_t>(box.cols) + 1);
  for (int c = 0; c <= box.cols; ++c)
    for (const auto& beta : basis)
      twisted[static_cast<std::size_t>(c)].push_back(
          expand_in_basis(TautExpr::schur(beta) * TautExpr::line(c), box));

  TwistReport report;
  report.per_alpha_holds = true;
  std::set<std::vector<Integer>> duals;
  for (const auto& alpha : basis) {
    const KVector d = dual_class(alpha, box);
    duals.insert(d.coords());
    std::optional<TwistMatch> match;
    for (int c = 0; c <= box.cols && !match; ++c)
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (twisted[static_cast<std::size_t>(c)][j] == d) {
          match = TwistMatch{alpha, basis[j], c};
          break;
        }
    if (match) report.per_alpha.push_back(*match);
    else report.per_alpha_holds = false;
  }
  std::set<std::vector<Integer>> uniform;
  for (const auto& v : twisted[static_cast<std::size_t>(box.cols)]) uniform.insert(v.coords());
  report.uniform_twist_holds = uniform == duals;
  return report;
}

MatrixReport make_matrix_report(const BoxShape& box, const IntegerMatrix& m) {
  MatrixReport report{box, {}, m, std::nullopt, smith_normal_form(m)};
  for (const auto& p : ChowRing::of(box)->basis()) report.basis.push_back(to_string(p));
  if (m.square()) report.det = determinant(m);
  return report;
}

std::string to_json(const MatrixReport& report, int indent) {
  nlohmann::ordered_json j;
  j["box"] = {report.box.rows, report.box.cols};
  j["basis"] = report.basis;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < report.matrix.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < report.matrix.cols(); ++c) row.push_back(report.matrix(r, c).str());
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  if (report.det) j["det"] = report.det->str();
  auto snf = nlohmann::ordered_json::array();
  for (const auto& d : report.snf) snf.push_back(d.str());
  j["snf"] = std::move(snf);
  return j.dump(indent);
}

MatrixReport parse_matrix_report(const std::string& json_text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("matrix JSON: ") + e.what());
  }
  auto integer = [](const nlohmann::ordered_json& v) -> Integer {
    if (v.is_string()) return parse_integer(v.get<std::string>());
    if (v.is_number_integer()) return Integer(v.get<long long>());
    throw DomainError("matrix JSON: integers must be decimal strings or numbers");
  };
  try {
    MatrixReport report;
    const auto& box = j.at("box");
    report.box = BoxShape(box.at(0).get<int>(), box.at(1).get<int>());
    if (j.contains("basis")) report.basis = j.at("basis").get<std::vector<std::string>>();
    const auto& rows = j.at("matrix");
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = n_rows ? rows.at(0).size() : 0;
    report.matrix = IntegerMatrix(n_rows, n_cols);
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (rows.at(r).size() != n_cols) throw DomainError("matrix JSON: ragged rows");
      for (std::size_t c = 0; c < n_cols; ++c) report.matrix(r, c) = integer(rows.at(r).at(c));
    }
    if (j.contains("det")) report.det = integer(j.at("det"));
    if (j.contains("snf"))
      for (const auto& d : j.at("snf")) report.snf.push_back(integer(d));
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace flopk
