#include "flopk/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "flopk/errors.hpp"

namespace flopk {

namespace {

std::vector<int> normalized(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw DomainError("partition parts must be non-negative");
    if (i > 0 && parts[i] > parts[i - 1])
      throw DomainError("partition parts must be non-increasing");
  }
  return parts;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : parts_(normalized(std::vector<int>(parts))) {}

Partition::Partition(std::vector<int> parts)
    : parts_(normalized(std::move(parts))) {}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contained_in(const Partition& other) const noexcept {
  if (rows() > other.rows()) return false;
  for (int i = 0; i < rows(); ++i)
    if (part(i) > other.part(i)) return false;
  return true;
}

BoxShape::BoxShape(int rows_, int cols_) : rows(rows_), cols(cols_) {
  if (rows < 1 || cols < 1)
    throw DomainError("box sides must be positive, got " +
                      std::to_string(rows) + "x" + std::to_string(cols));
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::ostringstream out;
  for (int i = 0; i < p.rows(); ++i) {
    if (i) out << ',';
    out << p.part(i);
  }
  return out.str();
}

Partition parse_partition(const std::string& text) {
  std::string trimmed;
  for (char c : text)
    if (c != ' ' && c != '(' && c != ')') trimmed.push_back(c);
  if (trimmed.empty() || trimmed == "-" || trimmed == "0") return {};
  std::vector<int> parts;
  std::istringstream in(trimmed);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw DomainError("empty part in partition '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad partition '" + text + "'");
    }
    if (used != item.size()) throw DomainError("bad partition '" + text + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n, int max_rows, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (max_rows >= 0 && static_cast<int>(current.size()) >= max_rows) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, max_part < 0 ? n : max_part);
  return out;
}

std::vector<Partition> enumerate_box(const BoxShape& box) {
  std::vector<Partition> out;
  for (int n = 0; n <= box.dimension(); ++n) {
    auto grade = partitions_of(n, box.rows, box.cols);
    out.insert(out.end(), grade.begin(), grade.end());
  }
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> parts(static_cast<std::size_t>(p.cols()), 0);
  for (int j = 0; j < p.cols(); ++j) {
    int height = 0;
    while (height < p.rows() && p.part(height) > j) ++height;
    parts[static_cast<std::size_t>(j)] = height;
  }
  return Partition(std::move(parts));
}

Partition column(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1));
}

std::vector<Partition> add_horizontal_strip(const Partition& p, int n) {
  // Row i may grow up to the old length of row i-1 (row 0 is unbounded).
  std::vector<Partition> out;
  const int rows = p.rows() + 1;
  std::vector<int> grown(static_cast<std::size_t>(rows), 0);
  std::function<void(int, int)> rec = [&](int row, int remaining) {
    if (row == rows) {
      if (remaining == 0) {
        std::vector<int> parts(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i)
          parts[static_cast<std::size_t>(i)] = p.part(i) + grown[static_cast<std::size_t>(i)];
        out.emplace_back(std::move(parts));
      }
      return;
    }
    const int room = row == 0 ? remaining : p.part(row - 1) - p.part(row);
    for (int add = std::min(room, remaining); add >= 0; --add) {
      grown[static_cast<std::size_t>(row)] = add;
      rec(row + 1, remaining - add);
    }
    grown[static_cast<std::size_t>(row)] = 0;
  };
  rec(0, n);
  return out;
}

namespace {

// Tableau of skew shape nu/lambda being filled one letter at a time.
// cells[r] holds the letters of row r past lambda, left to right.
struct SkewFilling {
  Partition shape;
  std::vector<std::vector<int>> cells;
};

// Reverse reading word (rows top to bottom, each right to left) must be a
// lattice word: every prefix has at least as many k's as (k+1)'s.
bool is_lattice(const SkewFilling& f, int letters) {
  std::vector<int> seen(static_cast<std::size_t>(letters) + 2, 0);
  for (const auto& row : f.cells) {
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      const int k = *it;
      ++seen[static_cast<std::size_t>(k)];
      if (k > 1 && seen[static_cast<std::size_t>(k)] > seen[static_cast<std::size_t>(k - 1)])
        return false;
    }
  }
  return true;
}

}  // namespace

LRTable lr_coefficients(const Partition& lambda, const Partition& mu,
                        const std::optional<BoxShape>& box) {
  LRTable table;
  const int letters = mu.rows();
  const int target_rows = lambda.rows() + letters;

  SkewFilling start{lambda, std::vector<std::vector<int>>(static_cast<std::size_t>(target_rows))};

  std::function<void(const SkewFilling&, int)> rec = [&](const SkewFilling& f, int letter) {
    if (box && !box->fits(f.shape)) return;
    if (letter > letters) {
      if (is_lattice(f, letters)) table[f.shape] += 1;
      return;
    }
    for (const Partition& next : add_horizontal_strip(f.shape, mu.part(letter - 1))) {
      SkewFilling g{next, f.cells};
      for (int r = 0; r < next.rows(); ++r)
        for (int c = f.shape.part(r); c < next.part(r); ++c)
          g.cells[static_cast<std::size_t>(r)].push_back(letter);
      // Restricting a lattice word to letters <= k keeps it lattice.
      if (!is_lattice(g, letter)) continue;
      rec(g, letter + 1);
    }
  };
  rec(start, 1);
  return table;
}

}  // namespace flopk
