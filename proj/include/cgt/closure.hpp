#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

/// Size caps for the search-based operations.  Defaults keep everything in
/// the verification suites at seconds-to-minutes scale.
struct SearchLimits {
  int closure_degree = 12;                 // backtracking search cap
  int naive_degree = 8;                    // full Sym(n) filter cap
  std::int64_t tuple_table = 10'000'000;   // cells in the k-tuple table
  std::uint64_t element_cap = kDefaultElementCap;
};

/// Canonical coloring of the k-tuples over {1..n} by G-orbit.
///
/// Tuples are encoded in base n with the first coordinate most significant,
/// so the numeric order of codes is the lexicographic order of tuples.  The
/// color of an orbit is the smallest code it contains.
class OrbitColoring {
public:
  OrbitColoring(int degree, int arity, std::vector<std::int32_t> colors, int color_count);

  int degree() const { return degree_; }
  int arity() const { return arity_; }
  std::int64_t table_size() const { return static_cast<std::int64_t>(colors_.size()); }
  int color_count() const { return color_count_; }

  std::int32_t color_of_code(std::int64_t code) const { return colors_[code]; }
  std::int32_t color_of_tuple(const std::vector<int>& tuple) const;

  std::int64_t encode(const std::vector<int>& tuple) const;
  std::vector<int> decode(std::int64_t code) const;

private:
  int degree_;
  int arity_;
  int color_count_;
  std::vector<std::int32_t> colors_;
};

/// Orbit coloring of the induced action on ordered k-tuples.
OrbitColoring tuple_orbits(const GeneratedGroup& g, int k, const SearchLimits& limits = {});

/// The group of all permutations of {1..n} preserving every G-orbit on
/// k-tuples, with a deterministic reduced generating set.  k = 1 is the
/// direct product of full symmetric groups on the orbits of g; for k >= 2
/// a color-pruned backtrack over point images finds every member.
GeneratedGroup k_closure(const GeneratedGroup& g, int k, const SearchLimits& limits = {});

/// Same group as k_closure, computed by filtering every element of Sym(n)
/// against the coloring.  Independent oracle; degree capped at 8.
GeneratedGroup k_closure_naive(const GeneratedGroup& g, int k, const SearchLimits& limits = {});

/// True iff no color-preserving permutation lies outside g; exits on the
/// first witness outside g.
bool is_k_closed(const GeneratedGroup& g, int k, const SearchLimits& limits = {});

/// Run fn on every permutation of {1..n} that preserves the coloring, in
/// lexicographic order of image sequences; stop early if fn returns false.
/// Returns false iff stopped early.
bool for_each_color_preserving(const OrbitColoring& coloring,
                               const std::function<bool(const Perm&)>& fn);

} // namespace cgt
