#include "flopk_cli/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flopk/flopk.hpp"
#include "flopk_acceptance/criteria.hpp"
#include "json.hpp"

namespace flopk::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string str(const Integer& x) { return x.str(); }

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(str(x));
  return out;
}

Json integer_matrix(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(str(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json basis_labels(const BoxShape& box) {
  Json out = Json::array();
  for (const auto& p : enumerate_box(box)) out.push_back(to_string(p));
  return out;
}

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    std::string trimmed;
    for (char c : item)
      if (c != ' ') trimmed.push_back(c);
    out.push_back(trimmed);
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text, std::size_t expected = 0) {
  std::vector<Rational> out;
  for (const auto& item : split(text)) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw DomainError(e.what());
    }
  }
  if (out.empty()) throw DomainError("expected a comma-separated list of numbers");
  if (expected && out.size() != expected)
    throw DomainError("expected " + std::to_string(expected) + " coordinates, got " + std::to_string(out.size()));
  return out;
}

BoxShape grassmannian_box(const CommandConfig& c) {
  if (c.t < 1 || c.t >= c.h) throw DomainError("need 1 <= t < h");
  return BoxShape::grassmannian(c.t, c.h);
}

BoxShape flop_box(const CommandConfig& c) {
  if (2 * c.t > c.h) throw DomainError("flop commands need t <= h/2");
  return grassmannian_box(c);
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// ---- subcommands -----------------------------------------------------------

int cmd_kbasis(const CommandConfig& c, std::ostream& out) {
  const BoxShape box = grassmannian_box(c);
  const auto basis = enumerate_box(box);
  if (!c.expression.empty()) {
    const KVector v = expand_in_basis(parse_expression(c.expression), box);
    if (c.format == Format::Table) {
      out << c.expression << " = " << to_string(v) << '\n';
    } else {
      Json j;
      j["box"] = {box.rows, box.cols};
      j["basis"] = basis_labels(box);
      j["expression"] = c.expression;
      j["coords"] = integers(v.coords());
      emit(out, j);
    }
    return kExitOk;
  }
  const RationalMatrix ch = ch_matrix(box);
  if (c.format == Format::Table) {
    out << "K(G(" << c.t << "," << c.h << ")) rank " << basis.size() << '\n';
    for (std::size_t j = 0; j < basis.size(); ++j) {
      out << "  [" << to_string(basis[j]) << "]  ch =";
      for (const auto& [p, coeff] : chern_character(basis[j], box).terms())
        out << ' ' << (coeff < 0 ? "- " : "+ ") << to_string(Rational(abs(coeff))) << " s(" << to_string(p) << ")";
      out << '\n';
    }
    return kExitOk;
  }
  Json rows = Json::array();
  for (std::size_t r = 0; r < ch.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t col = 0; col < ch.cols(); ++col) row.push_back(to_string(ch(r, col)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["box"] = {box.rows, box.cols};
  j["rank"] = basis.size();
  j["basis"] = basis_labels(box);
  j["ch_matrix"] = std::move(rows);
  emit(out, j);
  return kExitOk;
}

int cmd_flop_matrix(const CommandConfig& c, std::ostream& out) {
  const BoxShape box = flop_box(c);
  const auto report = make_matrix_report(box, flop_matrix(box));
  if (c.format == Format::Table) {
    out << "flop matrix on K(G(" << c.t << "," << c.h << ")), columns = duals of [";
    for (std::size_t i = 0; i < report.basis.size(); ++i) out << (i ? " " : "") << report.basis[i];
    out << "]\n";
    for (std::size_t r = 0; r < report.matrix.rows(); ++r) {
      for (std::size_t col = 0; col < report.matrix.cols(); ++col) out << std::setw(6) << report.matrix(r, col);
      out << '\n';
    }
    out << "det = " << *report.det << '\n';
  } else {
    out << to_json(report) << '\n';
  }
  return kExitOk;
}

int cmd_check_iso(const CommandConfig& c, std::ostream& out) {
  const BoxShape box = flop_box(c);
  const Integer det = determinant(flop_matrix(box));
  const bool iso = det == 1 || det == -1;
  if (c.format == Format::Table) {
    out << "G(" << c.t << "," << c.h << "): det = " << det << ", " << (iso ? "isomorphism" : "NOT an isomorphism") << '\n';
  } else {
    Json j;
    j["det"] = str(det);
    j["isomorphism"] = iso;
    emit(out, j);
  }
  return iso ? kExitOk : kExitVerdict;
}

int cmd_snf(const CommandConfig& c, std::ostream& out) {
  IntegerMatrix m;
  if (!c.matrix.empty()) {
    m = parse_matrix_report(c.matrix).matrix;
  } else {
    m = flop_matrix(flop_box(c));
  }
  const auto snf = smith_normal_form(m);
  std::optional<Integer> index;
  if (m.square()) index = image_index(m);
  if (c.format == Format::Table) {
    out << "invariant factors:";
    for (const auto& d : snf) out << ' ' << d;
    out << '\n';
    if (m.square()) out << "index: " << (index ? str(*index) : "infinite") << '\n';
  } else {
    Json j;
    j["snf"] = integers(snf);
    if (m.square()) j["index"] = index ? Json(str(*index)) : Json("infinite");
    emit(out, j);
  }
  return kExitOk;
}

int cmd_counterexample(const CommandConfig& c, std::ostream& out) {
  const IntegerMatrix m = c.line_basis ? psi_prime_matrix() : psi_prime_matrix_canonical();
  const auto snf = smith_normal_form(m);
  const auto index = image_index(m);
  const std::vector<std::string> domain = c.line_basis ? std::vector<std::string>{"O+(-1)", "O+", "O+(1)"}
                                                        : std::vector<std::string>{"O+", "tau+", "S^2 tau+"};
  const std::vector<std::string> target = c.line_basis ? std::vector<std::string>{"O(1)", "O", "O(-1)"}
                                                        : std::vector<std::string>{"O", "tau", "S^2 tau"};
  if (c.format == Format::Table) {
    out << "main-component map on K(T*P^2), " << (c.line_basis ? "line" : "canonical") << " basis\n";
    for (std::size_t col = 0; col < 3; ++col) {
      out << "  [" << domain[col] << "] ->";
      for (std::size_t r = 0; r < 3; ++r) out << ' ' << m(r, col) << "[" << target[r] << "]";
      out << '\n';
    }
    out << "invariant factors: " << snf[0] << ' ' << snf[1] << ' ' << snf[2] << '\n';
    out << "index: " << (index ? str(*index) : "infinite") << '\n';
  } else {
    Json j;
    j["basis"] = c.line_basis ? "line" : "canonical";
    j["domain"] = domain;
    j["target"] = target;
    Json images = Json::array();
    for (std::size_t col = 0; col < 3; ++col) images.push_back(integers(m.column(col)));
    j["images"] = std::move(images);
    j["basis_change"] = integer_matrix(line_basis_change(3));
    j["snf"] = integers(snf);
    j["index"] = index ? Json(str(*index)) : Json("infinite");
    j["isomorphism"] = index && *index == 1;
    emit(out, j);
  }
  return kExitOk;
}

int cmd_bott(const CommandConfig& c, std::ostream& out) {
  const BoxShape box = grassmannian_box(c);
  const Weight w = parse_weight(c.weight);
  if (w.t() != box.rows || w.h() != box.h())
    throw DomainError("weight blocks must have " + std::to_string(box.rows) + " and " + std::to_string(box.cols) +
                      " entries");
  const auto h = bott_cohomology(w);
  if (c.format == Format::Table) {
    if (h) out << "H^" << h->degree << " has dimension " << h->dimension << "; all other degrees vanish\n";
    else out << "all cohomology vanishes\n";
  } else {
    Json j;
    if (h) {
      j["degree"] = h->degree;
      j["dim"] = str(h->dimension);
    } else {
      j["zero"] = true;
    }
    emit(out, j);
  }
  return kExitOk;
}

int cmd_hodge(const CommandConfig& c, std::ostream& out) {
  const BoxShape box = grassmannian_box(c);
  const HodgeTable table = hodge_numbers(box);
  if (c.format == Format::Table) {
    out << "h^{p,q}(G(" << c.t << "," << c.h << ")), rows p, columns q\n";
    for (const auto& row : table) {
      for (const auto& x : row) out << std::setw(4) << x;
      out << '\n';
    }
  } else {
    Json rows = Json::array();
    Json diagonal = Json::array();
    for (std::size_t p = 0; p < table.size(); ++p) {
      rows.push_back(integers(table[p]));
      diagonal.push_back(str(table[p][p]));
    }
    Json j;
    j["box"] = {box.rows, box.cols};
    j["hodge"] = std::move(rows);
    j["diagonal"] = std::move(diagonal);
    emit(out, j);
  }
  return kExitOk;
}

template <class T>
Json scalars(const std::array<T, 6>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if constexpr (std::is_same_v<T, ModP>) out.push_back(std::to_string(x.value()));
    else out.push_back(to_string(x));
  }
  return out;
}

std::uint64_t checked_field(const CommandConfig& c) {
  if (!is_prime(*c.field)) throw DomainError("field order " + std::to_string(*c.field) + " is not prime");
  if (*c.field >= (std::uint64_t{1} << 62)) throw DomainError("field order too large");
  return *c.field;
}

ModP to_field(const Rational& x, std::uint64_t p) {
  if (!is_integral(x)) throw DomainError("field coordinates must be integers");
  const Integer reduced = ((boost::multiprecision::numerator(x) % p) + p) % p;
  return ModP(static_cast<std::int64_t>(reduced), p);
}

int cmd_gamma(const CommandConfig& c, std::ostream& out) {
  const auto v = parse_rationals(c.point, 5);
  Json j;
  bool indeterminate = false;
  std::string quadric;
  if (c.field) {
    const std::uint64_t p = checked_field(c);
    const AffinePoint5<ModP> pt{to_field(v[0], p), to_field(v[1], p), to_field(v[2], p), to_field(v[3], p),
                                to_field(v[4], p)};
    const auto image = gamma_map(pt);
    indeterminate = is_indeterminate(pt);
    quadric = std::to_string(quadric_value(image).value());
    j["field"] = p;
    j["image"] = scalars(image.as_array());
  } else {
    const AffinePoint5<Rational> pt{v[0], v[1], v[2], v[3], v[4]};
    const auto image = gamma_map(pt);
    indeterminate = is_indeterminate(pt);
    quadric = to_string(quadric_value(image));
    j["image"] = scalars(image.as_array());
  }
  j["quadric"] = quadric;
  j["indeterminate"] = indeterminate;
  if (c.format == Format::Table) {
    out << "gamma(" << c.point << ") = (";
    for (std::size_t i = 0; i < j["image"].size(); ++i) out << (i ? " : " : "") << j["image"][i].get<std::string>();
    out << ")\nquadric = " << quadric << (indeterminate ? "\npoint is in the indeterminacy locus" : "") << '\n';
  } else {
    emit(out, j);
  }
  return kExitOk;
}

int cmd_quadric(const CommandConfig& c, std::ostream& out) {
  const auto v = parse_rationals(c.point, 6);
  std::string value;
  if (c.field) {
    const std::uint64_t p = checked_field(c);
    const PlueckerPoint<ModP> pt{to_field(v[0], p), to_field(v[1], p), to_field(v[2], p),
                                 to_field(v[3], p), to_field(v[4], p), to_field(v[5], p)};
    value = std::to_string(quadric_value(pt).value());
  } else {
    value = to_string(quadric_value(PlueckerPoint<Rational>{v[0], v[1], v[2], v[3], v[4], v[5]}));
  }
  if (c.format == Format::Table) {
    out << "p12 p34 - p13 p24 + p14 p23 = " << value << '\n';
  } else {
    Json j;
    j["value"] = value;
    j["on_quadric"] = value == "0";
    emit(out, j);
  }
  return kExitOk;
}

int cmd_springer(const CommandConfig& c, std::ostream& out) {
  const SpringerFiber f = springer_fiber(c.t, c.h, c.i);
  if (c.format == Format::Table) {
    out << "fibre over rank " << c.i << ": G(" << f.t << "," << f.h << "), dimension " << f.dimension << '\n';
  } else {
    Json j;
    j["grassmann"] = {f.t, f.h};
    j["dim"] = f.dimension;
    emit(out, j);
  }
  return kExitOk;
}

Json word_report(const Permutation& sigma, const Word& word) {
  Json j;
  j["sigma"] = sigma.one_line();
  j["word"] = word;
  j["length"] = word.size();
  return j;
}

int cmd_weyl_word(const CommandConfig& c, std::ostream& out) {
  Json j;
  if (!c.permutation.empty()) {
    std::vector<int> images;
    for (const auto& item : split(c.permutation)) {
      try {
        images.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw DomainError("bad permutation entry '" + item + "'");
      }
    }
    const Permutation sigma(images);
    j = word_report(sigma, adjacent_word(sigma));
  } else {
    const Permutation sigma = duality_sigma(c.h);
    const Word word = duality_word(c.h);
    j = word_report(sigma, word);
    j["reduced_word"] = adjacent_word(sigma);
    j["product_is_inverse"] = word_product(c.h, word) == sigma.inverse();
  }
  if (c.format == Format::Table) {
    out << "sigma = " << to_string(Permutation(j["sigma"].get<std::vector<int>>())) << "\nword =";
    for (int i : j["word"].get<std::vector<int>>()) out << " s" << i;
    out << "\nlength = " << j["length"].get<std::size_t>() << '\n';
  } else {
    emit(out, j);
  }
  return kExitOk;
}

int cmd_chamber_sort(const CommandConfig& c, std::ostream& out) {
  const auto v = parse_rationals(c.vector);
  const auto result = chamber_sort(v);
  Json j = word_report(result.sigma, result.word);
  Json sorted = Json::array();
  for (const auto& x : apply_word(result.word, v)) sorted.push_back(to_string(x));
  j["sorted"] = std::move(sorted);
  if (c.format == Format::Table) {
    out << "sigma = " << to_string(result.sigma) << "\nword =";
    for (int i : result.word) out << " s" << i;
    out << "\nsorted = (";
    for (std::size_t i = 0; i < j["sorted"].size(); ++i) out << (i ? ", " : "") << j["sorted"][i].get<std::string>();
    out << ")\n";
  } else {
    emit(out, j);
  }
  return kExitOk;
}

int cmd_verify_all(const CommandConfig& c, std::ostream& out) {
  const auto results = acceptance::run_all(c.seed);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  if (c.format == Format::Table) {
    for (const auto& r : results) out << acceptance::format_line(r) << '\n';
    out << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
  } else {
    Json list = Json::array();
    for (const auto& r : results) {
      Json item;
      item["id"] = r.id;
      item["title"] = r.title;
      item["passed"] = r.passed;
      item["detail"] = r.detail;
      list.push_back(std::move(item));
    }
    Json j;
    j["seed"] = c.seed;
    j["criteria"] = std::move(list);
    j["passed"] = all;
    emit(out, j);
  }
  return all ? kExitOk : kExitVerdict;
}

void structured_error(std::ostream& out, const CommandConfig& c, const std::string& kind, const std::string& message) {
  if (c.format == Format::Table) {
    out << kind << ": " << message << '\n';
    return;
  }
  Json j;
  j["error"] = kind;
  j["message"] = message;
  emit(out, j);
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  using Handler = int (*)(const CommandConfig&, std::ostream&);
  static const std::map<std::string, Handler> handlers{
      {"kbasis", cmd_kbasis},           {"flop-matrix", cmd_flop_matrix}, {"check-iso", cmd_check_iso},
      {"snf", cmd_snf},                 {"counterexample", cmd_counterexample},
      {"bott", cmd_bott},               {"hodge", cmd_hodge},             {"gamma", cmd_gamma},
      {"quadric", cmd_quadric},         {"springer-fiber", cmd_springer}, {"weyl-word", cmd_weyl_word},
      {"chamber-sort", cmd_chamber_sort}, {"verify-all", cmd_verify_all},
  };
  const auto it = handlers.find(config.subcommand);
  if (it == handlers.end()) {
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return kExitUsage;
  }
  try {
    return it->second(config, out);
  } catch (const NonIntegralExpansion& e) {
    structured_error(out, config, "NonIntegralExpansion", e.what());
    return kExitVerdict;
  } catch (const RegularityViolation& e) {
    structured_error(out, config, "RegularityViolation", e.what());
    return kExitVerdict;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

std::variant<CommandConfig, int> parse_arguments(int argc, const char* const* argv, std::ostream& out,
                                                 std::ostream& err) {
  CommandConfig config;
  CLI::App app{"Exact K-theory of Grassmannians and stratified Mukai flops"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", config.seed, "Seed for randomized checks");

  auto add_th = [&](CLI::App* sub) {
    sub->add_option("--t", config.t, "Subspace dimension t")->required();
    sub->add_option("--h", config.h, "Ambient dimension h")->required();
  };

  auto* kbasis = app.add_subcommand("kbasis", "Basis of K(G(t,h)) and its Chern characters");
  add_th(kbasis);
  kbasis->add_option("--expr", config.expression, "Expand a class expression, e.g. \"L[2](Theta)*O(-1)\"");

  auto* flop = app.add_subcommand("flop-matrix", "Matrix of the flop map in the Schur basis (matrix JSON)");
  add_th(flop);

  auto* iso = app.add_subcommand("check-iso", "Determinant verdict for the flop map");
  add_th(iso);

  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix JSON or of the flop matrix");
  snf->add_option("--t", config.t, "Subspace dimension t");
  snf->add_option("--h", config.h, "Ambient dimension h");
  snf->add_option("--matrix", config.matrix, "Inline matrix JSON");
  std::string matrix_file;
  snf->add_option("--file", matrix_file, "Matrix JSON file")->check(CLI::ExistingFile);

  auto* counter = app.add_subcommand("counterexample", "Main-component map for t=1, h=3");
  bool canonical = false;
  bool line = false;
  auto* line_flag = counter->add_flag("--line-basis,--paper-basis", line, "Present in the ([O(1)],[O],[O(-1)]) basis (default)");
  auto* canonical_flag = counter->add_flag("--canonical-basis", canonical, "Present in the Schur basis");
  line_flag->excludes(canonical_flag);

  auto* bott = app.add_subcommand("bott", "Cohomology of an irreducible homogeneous bundle");
  add_th(bott);
  bott->add_option("--weight", config.weight, "Weight \"a1,..,at|b1,..,b(h-t)\" of Sigma^a tau* (x) Sigma^b q*")
      ->required();

  auto* hodge = app.add_subcommand("hodge", "Hodge numbers of G(t,h)");
  add_th(hodge);

  std::uint64_t field = 0;
  auto* gamma = app.add_subcommand("gamma", "Rational map to the Pluecker quadric");
  gamma->add_option("--point", config.point, "alpha,x,y,z,w")->required();
  auto* gamma_field = gamma->add_option("--field", field, "Prime field order");

  auto* quadric = app.add_subcommand("quadric", "Evaluate the Pluecker quadric");
  quadric->add_option("--point", config.point, "p12,p13,p14,p23,p24,p34")->required();
  auto* quadric_field = quadric->add_option("--field", field, "Prime field order");

  auto* springer = app.add_subcommand("springer-fiber", "Springer fibre over a rank-i point");
  add_th(springer);
  springer->add_option("--i", config.i, "Rank of the nilpotent")->required();

  auto* weyl = app.add_subcommand("weyl-word", "Duality element and its word, or a reduced word");
  weyl->add_option("--h", config.h, "Degree of the symmetric group");
  weyl->add_option("--permutation", config.permutation, "One-line permutation, e.g. 3,1,2");

  auto* chamber = app.add_subcommand("chamber-sort", "Sort a regular vector into the dominant chamber");
  chamber->add_option("--vector", config.vector, "Comma-separated rationals")->required();

  app.add_subcommand("verify-all", "Run every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "table" ? Format::Table : Format::Json;
  config.line_basis = !canonical;
  if (*gamma_field || *quadric_field) config.field = field;
  if (!matrix_file.empty()) {
    std::ifstream in(matrix_file);
    std::ostringstream text;
    text << in.rdbuf();
    config.matrix = text.str();
  }
  if (config.subcommand == "weyl-word" && config.permutation.empty() && weyl->count("--h") == 0) {
    err << "error: weyl-word needs --h or --permutation\n";
    return kExitUsage;
  }
  if (config.subcommand == "snf" && config.matrix.empty() && (snf->count("--t") == 0 || snf->count("--h") == 0)) {
    err << "error: snf needs --matrix, --file, or --t and --h\n";
    return kExitUsage;
  }
  return config;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse_arguments(argc, argv, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<CommandConfig>(parsed), out, err);
}

}  // namespace flopk::cli
