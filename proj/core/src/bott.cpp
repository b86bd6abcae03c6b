#include "flopk/bott.hpp"

#include <algorithm>
#include <sstream>

#include "flopk/errors.hpp"

namespace flopk {

namespace {

bool non_increasing(const std::vector<int>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(item, &used));
    } catch (const std::exception&) {
      throw DomainError("bad weight entry '" + item + "'");
    }
    if (used != item.size()) throw DomainError("bad weight entry '" + item + "'");
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

}  // namespace

void Weight::validate() const {
  if (a.empty() || b.empty()) throw DomainError("weight blocks must be non-empty");
  if (!non_increasing(a) || !non_increasing(b))
    throw DomainError("weight blocks must be non-increasing: " + to_string(*this));
}

std::vector<int> Weight::concatenated() const {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Weight line_bundle_weight(int k, const BoxShape& box) {
  return Weight{std::vector<int>(static_cast<std::size_t>(box.rows), k),
                std::vector<int>(static_cast<std::size_t>(box.cols), 0)};
}

Weight parse_weight(const std::string& text) {
  std::string compact;
  for (char c : text)
    if (c != ' ') compact.push_back(c);
  const auto bar = compact.find('|');
  if (bar == std::string::npos) throw DomainError("weight needs the form a1,..|b1,..");
  Weight w{parse_ints(compact.substr(0, bar)), parse_ints(compact.substr(bar + 1))};
  w.validate();
  return w;
}

std::string to_string(const Weight& w) { return join(w.a) + "|" + join(w.b); }

Integer weyl_dimension(const std::vector<int>& lambda) {
  Integer num = 1;
  Integer den = 1;
  const std::size_t n = lambda.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + static_cast<int>(j - i);
      den *= static_cast<int>(j - i);
    }
  return num / den;
}

std::optional<Cohomology> bott_cohomology(const Weight& w) {
  w.validate();
  std::vector<int> shifted = w.concatenated();
  const int n = static_cast<int>(shifted.size());
  for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] += n - 1 - i;

  // Bubble sort into strictly decreasing order; the swap count is the length
  // of the Weyl element, hence the cohomological degree.
  int swaps = 0;
  for (int pass = 0; pass < n; ++pass)
    for (int i = 0; i + 1 < n - pass; ++i)
      if (shifted[static_cast<std::size_t>(i)] < shifted[static_cast<std::size_t>(i + 1)]) {
        std::swap(shifted[static_cast<std::size_t>(i)], shifted[static_cast<std::size_t>(i + 1)]);
        ++swaps;
      }
  for (int i = 0; i + 1 < n; ++i)
    if (shifted[static_cast<std::size_t>(i)] == shifted[static_cast<std::size_t>(i + 1)])
      return std::nullopt;

  for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] -= n - 1 - i;
  return Cohomology{swaps, weyl_dimension(shifted)};
}

Weight serre_dual(const Weight& w) {
  Weight out;
  const int h = w.h();
  for (auto it = w.a.rbegin(); it != w.a.rend(); ++it) out.a.push_back(-*it - h);
  for (auto it = w.b.rbegin(); it != w.b.rend(); ++it) out.b.push_back(-*it);
  return out;
}

std::vector<Weight> exterior_cotangent_decomposition(int p, const BoxShape& box) {
  if (p < 0 || p > box.dimension())
    throw DomainError("form degree " + std::to_string(p) + " outside [0, " +
                      std::to_string(box.dimension()) + "]");
  std::vector<Weight> out;
  for (const Partition& mu : partitions_of(p, box.rows, box.cols)) {
    Weight w{std::vector<int>(static_cast<std::size_t>(box.rows), 0),
             std::vector<int>(static_cast<std::size_t>(box.cols), 0)};
    for (int i = 0; i < box.rows; ++i) w.a[static_cast<std::size_t>(i)] = -mu.part(box.rows - 1 - i);
    const Partition dual_shape = conjugate(mu);
    for (int j = 0; j < box.cols; ++j) w.b[static_cast<std::size_t>(j)] = dual_shape.part(j);
    out.push_back(std::move(w));
  }
  return out;
}

HodgeTable hodge_numbers(const BoxShape& box) {
  const int dim = box.dimension();
  HodgeTable table(static_cast<std::size_t>(dim) + 1,
                   std::vector<Integer>(static_cast<std::size_t>(dim) + 1, 0));
  for (int p = 0; p <= dim; ++p)
    for (const Weight& w : exterior_cotangent_decomposition(p, box))
      if (const auto h = bott_cohomology(w))
        table[static_cast<std::size_t>(p)][static_cast<std::size_t>(h->degree)] += h->dimension;
  return table;
}

std::vector<Integer> gaussian_binomial(int h, int t) {
  if (t < 0 || t > h) return {};
  // q-Pascal: [n, k] = [n-1, k-1] + q^k [n-1, k].
  std::vector<std::vector<std::vector<Integer>>> table(static_cast<std::size_t>(h) + 1);
  for (int n = 0; n <= h; ++n) {
    auto& row = table[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n) + 1);
    row[0] = {1};
    row[static_cast<std::size_t>(n)] = {1};
    for (int k = 1; k < n; ++k) {
      const auto& left = table[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
      const auto& right = table[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
      std::vector<Integer> sum(std::max(left.size(), right.size() + static_cast<std::size_t>(k)), 0);
      for (std::size_t i = 0; i < left.size(); ++i) sum[i] += left[i];
      for (std::size_t i = 0; i < right.size(); ++i) sum[i + static_cast<std::size_t>(k)] += right[i];
      row[static_cast<std::size_t>(k)] = std::move(sum);
    }
  }
  return table[static_cast<std::size_t>(h)][static_cast<std::size_t>(t)];
}

}  // namespace flopk
