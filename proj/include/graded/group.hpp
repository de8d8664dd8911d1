#pragma once

// Finite groups given by Cayley table.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace graded {

// Sorted, deduplicated element indices.
using SubsetOfG = std::vector<int>;

struct GroupDiagnostics {
  bool ok = true;
  std::string message;
};

class FiniteGroup {
 public:
  // Only shape is checked here (square table, indices in range, distinct
  // names); the group axioms are checked by validate_group.
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table);

  // Construct and require validate_group to pass; throws InvalidInput.
  static FiniteGroup checked(std::vector<std::string> names, std::vector<std::vector<int>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  // Permutation composition on {0,1,2}; element names are one-line images.
  static FiniteGroup symmetric3();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int mul(int g, int h) const {
    return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)];
  }
  // -1 when the table has no two-sided identity.
  int identity() const { return identity_; }
  // -1 entries when the table has no identity or an element lacks an inverse.
  int inverse(int g) const { return inverse_[static_cast<std::size_t>(g)]; }
  int index_of(const std::string& name) const;

  bool is_abelian() const;

  bool operator==(const FiniteGroup&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  int identity_ = -1;
  std::vector<int> inverse_;
};

// Latin square, two-sided identity, inverses, and associativity over all
// triples.
GroupDiagnostics validate_group(const FiniteGroup& g);

// Subsets containing e and closed under the product, by exhaustive scan;
// refuses groups of order above 16 with a budget error. Cross-checked against
// the subgroup list.
std::vector<SubsetOfG> submonoids(const FiniteGroup& g);
std::vector<SubsetOfG> subgroups(const FiniteGroup& g);

bool is_closed(const FiniteGroup& g, const SubsetOfG& s);

// Upper central series reaches the whole group.
bool is_nilpotent(const FiniteGroup& g);

// Subset encoded by bit mask (bit i = element i).
SubsetOfG subset_from_mask(std::uint64_t mask, int order);

std::string format_subset(const FiniteGroup& g, const SubsetOfG& s);

}  // namespace graded
