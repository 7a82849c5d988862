#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/abstract.hpp"
#include "cgt/closure.hpp"
#include "cgt/structure.hpp"

namespace cgt {

/// One faithful permutation representation: a disjoint union of coset
/// actions, identified by the conjugacy classes of its point stabilizers.
struct FaithfulRep {
  GeneratedGroup group;
  std::vector<int> class_ids;   // nondecreasing indices into the class list
  std::string description;      // subgroup multiset, human readable
};

/// Every faithful action of a on at most max_degree points, one per
/// multiset of point-stabilizer conjugacy classes (the whole group is
/// excluded; fixed points never change closures).  Ordered by total
/// degree, then lexicographically by class multiset.
std::vector<FaithfulRep> faithful_representations(const AbstractGroup& a, int max_degree);

enum class VerdictKind { TheoremDecided, WitnessFound, ExhaustedBound };

/// Outcome of a total-k-closedness probe.  Search alone never decides
/// total closedness: TheoremDecided comes only from an implemented
/// criterion, WitnessFound carries a faithful representation that is not
/// k-closed, and ExhaustedBound records the degree searched.
struct Verdict {
  VerdictKind kind;
  int k = 0;
  bool totally_closed = false;            // TheoremDecided
  std::string citation;                   // TheoremDecided
  std::optional<FaithfulRep> witness;     // WitnessFound
  std::uint64_t closure_order = 0;        // WitnessFound
  int bound = 0;                          // ExhaustedBound / degree searched

  std::string describe() const;
};

/// Search every faithful representation of a on at most max_degree points
/// for one that is not k-closed.
Verdict probe_totally_k_closed(const AbstractGroup& a, int k, int max_degree,
                               SearchLimits limits = {});

/// Decide total k-closedness of a nilpotent group whose Sylow p-subgroups
/// all have order at most p^k: totally k-closed iff no Sylow subgroup is
/// elementary abelian of order exactly p^k.  Throws NotNilpotentError or
/// HypothesisNotMetError when the criterion does not apply.
Verdict classify_totally_k_closed(const GeneratedGroup& g, int k);

/// Decide total 2-closedness of a nilpotent group via the classification
/// of totally 2-closed nilpotent groups: cyclic, or generalized quaternion
/// times cyclic of odd order.
Verdict classify_totally_2_closed_nilpotent(const GeneratedGroup& g);

/// Faithful representation of a nilpotent group built from a faithful
/// representation of its Sylow q-subgroup together with the remaining
/// Sylow subgroups acting regularly, on the disjoint union of the domains.
GeneratedGroup combine_sylow_witness(const SylowDecomposition& syl, std::uint64_t q,
                                     const GeneratedGroup& witness);

/// True iff the k-closure of g equals the group generated by the
/// k-closures of its Sylow components (checked by mutual membership).
bool verify_chnl_product(const GeneratedGroup& g, int k, const SearchLimits& limits = {});

} // namespace cgt
