#pragma once

#include <istream>
#include <string>
#include <vector>

namespace hoops::words {

/// Multiplication table of a finite group on elements 0..n-1, element 0 the identity.
///
/// Construction validates the group axioms (identity row/column, Latin square,
/// associativity) and throws InputError on any violation.
class CayleyTable
{
public:
  explicit CayleyTable(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& rows() const { return table_; }

  /// Text format: first line the order n, then n lines of n whitespace
  /// separated indices.  Lines starting with '#' are comments.
  static CayleyTable parse(std::istream& in);
  static CayleyTable parse(const std::string& text);
  std::string to_text() const;

  static CayleyTable cyclic(int n);
  static CayleyTable symmetric(int n);
  static CayleyTable alternating(int n);
  static CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);

private:
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

/// Sorted list of group elements.
using ElementSet = std::vector<int>;

/// Smallest subgroup containing the given elements.
ElementSet subgroup_closure(const CayleyTable& g, const ElementSet& generators);

/// Commutator subgroup of a subgroup H (given as its element set).
ElementSet derived_subgroup(const CayleyTable& g, const ElementSet& h);

/// G, G', G'', ... stopping after the trivial group or after a repeat.
///
/// A perfect group therefore yields [G, G]; a solvable group ends in {0}.
std::vector<ElementSet> derived_series(const CayleyTable& g);

bool is_solvable(const CayleyTable& g);

} // namespace hoops::words
