#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/perm.hpp"

namespace cgt {

inline constexpr std::uint64_t kDefaultElementCap = 100'000;

/// A permutation group given by a nonempty generating set of equal degree.
struct GeneratedGroup {
  int degree;
  std::vector<Perm> generators;

  GeneratedGroup(int degree_, std::vector<Perm> generators_);

  /// The trivial group on n points.
  static GeneratedGroup trivial(int degree_);
};

/// Parse the group spec grammar "degree: gen1, gen2, ...",
/// e.g. "6: (3 4)(5 6), (1 2)(5 6)".
GeneratedGroup parse_group_spec(const std::string& text);

std::string format_group(const GeneratedGroup& g);

/// Base points, basic orbits with transversals, and strong generators.
///
/// Built by a deterministic Schreier-Sims procedure; all queries are pure
/// and the structure is immutable once construction finishes (insert is
/// the construction primitive and is also used to grow reduction chains
/// one element at a time).
class StabilizerChain {
public:
  /// Chain of the trivial group.
  explicit StabilizerChain(int degree);

  /// Build from generators; seed_base points become the leading base
  /// points in order (used for point stabilizers), each kept even when
  /// its basic orbit is trivial.
  static StabilizerChain build(int degree, const std::vector<Perm>& generators,
                               const std::vector<int>& seed_base = {});

  int degree() const { return degree_; }
  std::uint64_t order() const;
  const std::vector<int>& base() const { return base_; }
  std::vector<std::uint64_t> orbit_sizes() const;

  bool contains(const Perm& p) const;

  /// Extend the represented group by one more generator.
  void insert(const Perm& p);

  /// Generators of the pointwise stabilizer of base()[0..level-1];
  /// level 0 gives the full strong generating set at the top level.
  std::vector<Perm> stabilizer_generators(std::size_t level) const;

  /// Every element exactly once, in a deterministic order.
  /// Throws CapExceededError if order() > cap.
  std::vector<Perm> elements(std::uint64_t cap = kDefaultElementCap) const;

  /// Residue of p after sifting through the chain (identity iff member).
  Perm sift(const Perm& p) const;

private:
  struct Level {
    int beta = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;         // BFS order, orbit[0] == beta
    std::vector<int> trans_index;   // point -> index into trans, or -1
    std::vector<Perm> trans;        // trans[k] maps beta to orbit[k]
  };

  int degree_;
  std::vector<int> base_;
  std::vector<Level> levels_;

  void add_level(int beta);
  void recompute_orbit(Level& lvl) const;
  std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const;
  void verify_from_bottom();
};

/// Chain with the greedy base: repeatedly the smallest point moved by the
/// current stabilizer.
StabilizerChain build_chain(const GeneratedGroup& g);

std::uint64_t order(const GeneratedGroup& g);
bool contains(const GeneratedGroup& g, const Perm& p);

/// Orbit partition of {1..degree}, ordered by smallest element.
std::vector<std::vector<int>> orbits(const GeneratedGroup& g);

/// Full stabilizer of a point, via a chain seeded with that point.
GeneratedGroup point_stabilizer(const GeneratedGroup& g, int point);

bool is_abelian(const GeneratedGroup& g);
bool is_transitive(const GeneratedGroup& g);
bool is_regular(const GeneratedGroup& g);

/// Group acting on the disjoint union of the parts' domains; degree is the
/// sum of degrees and each generator is extended by fixed points elsewhere.
GeneratedGroup disjoint_union_product(const std::vector<GeneratedGroup>& parts);

/// True iff every generator of a lies in b (i.e. <a> <= <b>); degrees must match.
bool is_subgroup_of(const GeneratedGroup& a, const StabilizerChain& b_chain);

/// Equal element sets: same degree, same order, generators of a contained in b.
bool group_equal(const GeneratedGroup& a, const GeneratedGroup& b);

} // namespace cgt
