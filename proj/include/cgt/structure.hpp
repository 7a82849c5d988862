#pragma once

#include <cstdint>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

inline constexpr int kDefaultBaseSearchDegreeCap = 16;

/// Least m >= 1 with p^m the identity (lcm of cycle lengths).
std::uint64_t element_order(const Perm& p);

/// True for primes; trial division.
bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// The p-part of x: with m = order(x) = p^e * m' and gcd(p, m') = 1, the
/// power x^a where a = 1 mod p^e and a = 0 mod m'.  Has order p^e; the
/// p-parts over all primes dividing m commute and multiply back to x.
Perm p_part(const Perm& x, std::uint64_t p);

/// Sylow decomposition of a nilpotent permutation group: one component
/// per prime dividing the order.
struct SylowDecomposition {
  std::vector<std::uint64_t> primes;       // ascending
  std::vector<GeneratedGroup> components;  // aligned with primes
  std::vector<std::uint64_t> orders;       // component orders, p^e_p

  const GeneratedGroup& component(std::uint64_t p) const;
};

/// Components generated by the p-parts of the generators, validated to be
/// pairwise elementwise-commuting p-groups whose orders multiply to |G|.
/// Throws NotNilpotentError when validation fails.
SylowDecomposition sylow_decomposition(const GeneratedGroup& g);

bool is_nilpotent(const GeneratedGroup& g);

/// Base built by repeatedly fixing the smallest point moved by the current
/// stabilizer; empty for the trivial group.
std::vector<int> greedy_base(const GeneratedGroup& g);

/// Exact base number: minimal size of a subset with trivial pointwise
/// stabilizer, by increasing-size search over irredundant sequences with
/// one candidate per orbit of the current stabilizer.
int base_number(const GeneratedGroup& g, int degree_cap = kDefaultBaseSearchDegreeCap);

/// n(G) for abelian g: the maximum over primes p | |G| of the p-rank,
/// read off from the count of solutions of x^p = identity.
/// Throws NonAbelianInputError for nonabelian input.
int invariant_factor_count(const GeneratedGroup& g,
                           std::uint64_t element_cap = kDefaultElementCap);

/// True iff g is abelian of p-power order with every generator order
/// dividing p (the trivial group qualifies for every p).
bool is_elementary_abelian(const GeneratedGroup& g, std::uint64_t p);

} // namespace cgt
