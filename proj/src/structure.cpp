#include "cgt/structure.hpp"

#include <algorithm>
#include <numeric>

namespace cgt {

std::uint64_t element_order(const Perm& p) {
  std::uint64_t result = 1;
  std::vector<char> visited(p.degree(), 0);
  for (int start = 1; start <= p.degree(); ++start) {
    if (visited[start - 1])
      continue;
    std::uint64_t len = 0;
    int x = start;
    do {
      visited[x - 1] = 1;
      x = p.images()[x - 1];
      ++len;
    } while (x != start);
    result = std::lcm(result, len);
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> factors;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
  }
  if (n > 1)
    factors.emplace_back(n, 1);
  return factors;
}

namespace {

std::uint64_t modular_inverse(std::uint64_t a, std::uint64_t m) {
  // extended Euclid; gcd(a, m) == 1 assumed
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0)
    t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

} // namespace

Perm p_part(const Perm& x, std::uint64_t p) {
  if (!is_prime(p))
    throw DomainError("p_part requires a prime");
  const std::uint64_t m = element_order(x);
  std::uint64_t pe = 1;
  std::uint64_t rest = m;
  while (rest % p == 0) {
    rest /= p;
    pe *= p;
  }
  if (pe == 1)
    return Perm::identity(x.degree());
  if (rest == 1)
    return x;
  // a = 1 (mod pe), a = 0 (mod rest)
  const std::uint64_t a = rest * modular_inverse(rest % pe, pe);
  return x.power(a);
}

const GeneratedGroup& SylowDecomposition::component(std::uint64_t p) const {
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (primes[i] == p)
      return components[i];
  throw DomainError("no Sylow component for that prime");
}

SylowDecomposition sylow_decomposition(const GeneratedGroup& g) {
  const std::uint64_t n = order(g);
  SylowDecomposition result;
  std::uint64_t product = 1;
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    std::vector<Perm> gens;
    for (const Perm& s : g.generators)
      gens.push_back(p_part(s, p));
    GeneratedGroup component(g.degree, std::move(gens));
    const std::uint64_t comp_order = order(component);
    std::uint64_t reduced = comp_order;
    while (reduced % p == 0)
      reduced /= p;
    if (reduced != 1)
      throw NotNilpotentError("Sylow component for p=" + std::to_string(p) +
                              " is not a p-group");
    product *= comp_order;
    result.primes.push_back(p);
    result.orders.push_back(comp_order);
    result.components.push_back(std::move(component));
  }
  if (product != n)
    throw NotNilpotentError("Sylow component orders do not multiply to the group order");
  for (std::size_t i = 0; i < result.components.size(); ++i)
    for (std::size_t j = i + 1; j < result.components.size(); ++j)
      for (const Perm& x : result.components[i].generators)
        for (const Perm& y : result.components[j].generators)
          if (compose(x, y) != compose(y, x))
            throw NotNilpotentError("Sylow components fail elementwise commutation");
  return result;
}

bool is_nilpotent(const GeneratedGroup& g) {
  try {
    sylow_decomposition(g);
    return true;
  } catch (const NotNilpotentError&) {
    return false;
  }
}

std::vector<int> greedy_base(const GeneratedGroup& g) { return build_chain(g).base(); }

namespace {

bool base_of_size_exists(const GeneratedGroup& h, std::uint64_t h_order, int remaining) {
  if (h_order == 1)
    return true;
  if (remaining == 0)
    return false;
  // One candidate per orbit of the current stabilizer: its smallest point.
  for (const std::vector<int>& orbit : orbits(h)) {
    if (orbit.size() < 2)
      continue;
    GeneratedGroup stab = point_stabilizer(h, orbit[0]);
    const std::uint64_t stab_order = h_order / orbit.size();
    if (base_of_size_exists(stab, stab_order, remaining - 1))
      return true;
  }
  return false;
}

} // namespace

int base_number(const GeneratedGroup& g, int degree_cap) {
  if (g.degree > degree_cap)
    throw CapExceededError("degree " + std::to_string(g.degree) +
                           " exceeds exact base search cap " + std::to_string(degree_cap));
  const StabilizerChain chain = build_chain(g);
  if (chain.order() == 1)
    return 0;
  const int greedy_len = static_cast<int>(chain.base().size());
  for (int b = 1; b < greedy_len; ++b)
    if (base_of_size_exists(g, chain.order(), b))
      return b;
  return greedy_len;
}

int invariant_factor_count(const GeneratedGroup& g, std::uint64_t element_cap) {
  if (!is_abelian(g))
    throw NonAbelianInputError("invariant factors are defined here for abelian groups only");
  const StabilizerChain chain = build_chain(g);
  const std::vector<Perm> elems = chain.elements(element_cap);
  int result = 0;
  for (const auto& [p, e] : factorize(chain.order())) {
    (void)e;
    std::uint64_t count = 0;
    for (const Perm& x : elems)
      if (x.power(p).is_identity())
        ++count;
    int rank = 0;
    while (count > 1) {
      count /= p;
      ++rank;
    }
    result = std::max(result, rank);
  }
  return result;
}

bool is_elementary_abelian(const GeneratedGroup& g, std::uint64_t p) {
  if (!is_prime(p))
    throw DomainError("is_elementary_abelian requires a prime");
  if (!is_abelian(g))
    return false;
  std::uint64_t n = order(g);
  while (n % p == 0)
    n /= p;
  if (n != 1)
    return false;
  for (const Perm& s : g.generators)
    if (p % element_order(s) != 0)
      return false;
  return true;
}

} // namespace cgt
