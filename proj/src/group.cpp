#include "graded/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "graded/error.hpp"

namespace graded {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const auto n = names_.size();
  if (n == 0) invalid_input("a group needs at least one element");
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n)
    invalid_input("group element names must be distinct");
  if (table_.size() != n) invalid_input("Cayley table must have one row per element");
  for (const auto& row : table_) {
    if (row.size() != n) invalid_input("Cayley table must be square");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        invalid_input("Cayley table entry out of range");
  }
  const int order = static_cast<int>(n);
  for (int e = 0; e < order && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  inverse_.assign(n, -1);
  if (identity_ >= 0)
    for (int g = 0; g < order; ++g)
      for (int h = 0; h < order; ++h)
        if (mul(g, h) == identity_ && mul(h, g) == identity_) {
          inverse_[static_cast<std::size_t>(g)] = h;
          break;
        }
}

FiniteGroup FiniteGroup::checked(std::vector<std::string> names,
                                 std::vector<std::vector<int>> table) {
  FiniteGroup g(std::move(names), std::move(table));
  auto diag = validate_group(g);
  if (!diag.ok) invalid_input("invalid group: " + diag.message);
  return g;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({"e"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) invalid_input("cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i)].push_back((i + j) % n);
  }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms)
    names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  std::vector<std::vector<int>> table(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> comp(3);
      for (int i = 0; i < 3; ++i) comp[static_cast<std::size_t>(i)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
      auto it = std::find(perms.begin(), perms.end(), comp);
      table[a][b] = static_cast<int>(it - perms.begin());
    }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::string> names;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y)
      table[static_cast<std::size_t>(x)].push_back(a.mul(x / nb, y / nb) * nb +
                                                   b.mul(x % nb, y % nb));
  return FiniteGroup(std::move(names), std::move(table));
}

int FiniteGroup::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) invalid_input("unknown group element '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (int g = 0; g < order(); ++g)
    for (int h = g + 1; h < order(); ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

GroupDiagnostics validate_group(const FiniteGroup& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row_seen(static_cast<std::size_t>(n)), col_seen(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b) {
      auto r = static_cast<std::size_t>(g.mul(a, b));
      auto c = static_cast<std::size_t>(g.mul(b, a));
      if (row_seen[r])
        return {false, "row " + g.name(a) + " repeats an entry (not a Latin square)"};
      if (col_seen[c])
        return {false, "column " + g.name(a) + " repeats an entry (not a Latin square)"};
      row_seen[r] = col_seen[c] = true;
    }
  }
  if (g.identity() < 0) return {false, "no two-sided identity"};
  for (int a = 0; a < n; ++a)
    if (g.inverse(a) < 0) return {false, "element " + g.name(a) + " has no inverse"};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          return {false, "associativity fails at (" + g.name(a) + "," + g.name(b) + "," +
                             g.name(c) + ")"};
  return {};
}

SubsetOfG subset_from_mask(std::uint64_t mask, int order) {
  SubsetOfG s;
  for (int i = 0; i < order; ++i)
    if (mask >> i & 1U) s.push_back(i);
  return s;
}

bool is_closed(const FiniteGroup& g, const SubsetOfG& s) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  for (int x : s) in[static_cast<std::size_t>(x)] = true;
  for (int x : s)
    for (int y : s)
      if (!in[static_cast<std::size_t>(g.mul(x, y))]) return false;
  return true;
}

namespace {

constexpr int kMaxSubsetScanOrder = 16;

void require_scan_budget(const FiniteGroup& g) {
  if (g.order() > kMaxSubsetScanOrder)
    budget_exceeded("subset scan limited to groups of order <= 16, got " +
                    std::to_string(g.order()));
}

}  // namespace

std::vector<SubsetOfG> subgroups(const FiniteGroup& g) {
  require_scan_budget(g);
  const int n = g.order();
  const std::uint64_t e_bit = std::uint64_t{1} << g.identity();
  std::vector<SubsetOfG> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & e_bit)) continue;
    auto s = subset_from_mask(mask, n);
    if (!is_closed(g, s)) continue;
    bool inverses = std::all_of(s.begin(), s.end(), [&](int x) {
      return (mask >> g.inverse(x) & 1U) != 0;
    });
    if (inverses) out.push_back(std::move(s));
  }
  return out;
}

std::vector<SubsetOfG> submonoids(const FiniteGroup& g) {
  require_scan_budget(g);
  const int n = g.order();
  const std::uint64_t e_bit = std::uint64_t{1} << g.identity();
  std::vector<SubsetOfG> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask & e_bit)) continue;
    auto s = subset_from_mask(mask, n);
    if (is_closed(g, s)) out.push_back(std::move(s));
  }
  // Every element of a finite group has finite order, so closed submonoids
  // are subgroups.
  if (out != subgroups(g)) internal_inconsistency("submonoid list differs from subgroup list");
  return out;
}

bool is_nilpotent(const FiniteGroup& g) {
  const int n = g.order();
  const int e = g.identity();
  std::vector<bool> z(static_cast<std::size_t>(n), false);
  z[static_cast<std::size_t>(e)] = true;
  for (;;) {
    std::vector<bool> next(static_cast<std::size_t>(n), false);
    for (int a = 0; a < n; ++a) {
      bool central = true;
      for (int x = 0; x < n && central; ++x) {
        int comm = g.mul(g.mul(g.inverse(a), g.inverse(x)), g.mul(a, x));
        central = z[static_cast<std::size_t>(comm)];
      }
      next[static_cast<std::size_t>(a)] = central;
    }
    if (next == z) break;
    z = std::move(next);
  }
  return std::all_of(z.begin(), z.end(), [](bool b) { return b; });
}

std::string format_subset(const FiniteGroup& g, const SubsetOfG& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += g.name(s[i]);
  }
  return out + "}";
}

}  // namespace graded
