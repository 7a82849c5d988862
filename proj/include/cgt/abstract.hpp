#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

inline constexpr int kDefaultTableOrderCap = 128;
inline constexpr int kDefaultLatticeOrderCap = 64;

/// A finite group given by its multiplication table, with element labels
/// and a distinguished generating sequence.  Construction validates the
/// group axioms (associativity is checked in full for orders up to the
/// table cap).
class AbstractGroup {
public:
  AbstractGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels,
                std::vector<int> generators);

  static AbstractGroup cyclic(int n);
  static AbstractGroup direct_product(const AbstractGroup& a, const AbstractGroup& b);
  static AbstractGroup quaternion8();

  int order() const { return order_; }
  int mult(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<int>& generators() const { return generators_; }

  /// Order of the element at index a.
  int element_order(int a) const;

private:
  int order_;
  int identity_ = -1;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::vector<int> generators_;
};

/// A subgroup recorded as a sorted list of element indices.
struct Subgroup {
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

/// Multiplication table of a permutation group under composition; element
/// labels are cycle notations and the generating sequence maps the input
/// generators.  Throws CapExceededError above the order cap.
AbstractGroup cayley_table(const GeneratedGroup& g, int order_cap = kDefaultTableOrderCap);

/// The group acting on its own element set by right multiplication.
GeneratedGroup regular_representation(const AbstractGroup& a);

/// All subgroups, deduplicated, ordered by (order, element set).
/// Computed from cyclic subgroups closed under pairwise join.
/// Throws CapExceededError above the lattice cap.
std::vector<Subgroup> subgroups(const AbstractGroup& a, int order_cap = kDefaultLatticeOrderCap);

/// Subgroup generated by a set of element indices.
Subgroup generated_subgroup(const AbstractGroup& a, const std::vector<int>& seed);

/// Conjugate  g^-1 h g  of a subgroup.
Subgroup conjugate_subgroup(const AbstractGroup& a, const Subgroup& h, int g);

/// Intersection of all conjugates of h: the kernel of the coset action.
Subgroup core(const AbstractGroup& a, const Subgroup& h);

/// Action of the table generators on right cosets of h, degree [a:h].
/// Cosets are numbered in order of their smallest element index.
GeneratedGroup coset_action(const AbstractGroup& a, const Subgroup& h);

/// Action of the table generators on the disjoint union of the coset
/// spaces of several subgroups: each generator acts on every block at
/// once.  Faithful iff the cores of the subgroups intersect trivially.
GeneratedGroup combined_coset_action(const AbstractGroup& a, const std::vector<Subgroup>& hs);

} // namespace cgt
