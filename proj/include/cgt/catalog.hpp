#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

/// A named test group with its expected properties.
struct CatalogEntry {
  std::string name;
  std::string params;
  GeneratedGroup group;
  std::uint64_t expected_order;
  bool abelian;
  bool nilpotent;
  std::optional<int> invariant_factors;  // n(G), for abelian entries
};

/// The standard group catalog used across the verification suites:
/// cyclic groups, elementary abelian families in both regular and
/// intransitive form, dihedral and quaternion groups, the strictness
/// families for the base-number bounds, and a non-nilpotent control.
const std::vector<CatalogEntry>& catalog();

/// Entry lookup by name; throws DomainError if absent.
const CatalogEntry& catalog_entry(const std::string& name);

} // namespace cgt
