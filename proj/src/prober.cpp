#include "cgt/prober.hpp"

#include <algorithm>
#include <sstream>

namespace cgt {

namespace {

struct RepClass {
  Subgroup representative;
  int degree;                 // index [a : H]
  std::vector<int> core_set;  // sorted element indices of the core
};

// Conjugacy classes of proper subgroups, in (order, element set) order of
// their representatives; the representative is the class member that comes
// first in that order.
std::vector<RepClass> proper_subgroup_classes(const AbstractGroup& a) {
  const std::vector<Subgroup> all = subgroups(a);
  std::vector<char> assigned(all.size(), 0);
  std::vector<RepClass> classes;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (assigned[i] || all[i].order() == a.order())
      continue;
    for (int g = 0; g < a.order(); ++g) {
      const Subgroup conj = conjugate_subgroup(a, all[i], g);
      for (std::size_t j = i; j < all.size(); ++j)
        if (!assigned[j] && all[j] == conj) {
          assigned[j] = 1;
          break;
        }
    }
    RepClass cls;
    cls.representative = all[i];
    cls.degree = a.order() / all[i].order();
    cls.core_set = core(a, all[i]).elements;
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<int> intersect_sorted(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

void describe_multiset(const AbstractGroup& a, const std::vector<RepClass>& classes,
                       const std::vector<int>& multiset, std::ostream& out) {
  out << "cosets of {";
  for (std::size_t i = 0; i < multiset.size(); ++i) {
    const Subgroup& h = classes[multiset[i]].representative;
    if (i)
      out << ", ";
    out << "[";
    for (std::size_t j = 0; j < h.elements.size(); ++j) {
      if (j)
        out << " ";
      out << a.label(h.elements[j]);
    }
    out << "]";
  }
  out << "}";
}

} // namespace

std::vector<FaithfulRep> faithful_representations(const AbstractGroup& a, int max_degree) {
  const std::vector<RepClass> classes = proper_subgroup_classes(a);
  const std::vector<int> whole_kernel = [&] {
    std::vector<int> all(a.order());
    for (int i = 0; i < a.order(); ++i)
      all[i] = i;
    return all;
  }();

  std::vector<FaithfulRep> reps;
  std::vector<int> multiset;

  // Depth-first over nondecreasing class sequences with an exact degree
  // total, emitted in ascending total-degree order.
  auto emit = [&](const std::vector<int>& chosen, const std::vector<int>& kernel) {
    if (kernel.size() != 1)
      return;
    std::vector<Subgroup> stabilizers;
    for (int c : chosen)
      stabilizers.push_back(classes[c].representative);
    FaithfulRep rep{combined_coset_action(a, stabilizers), chosen, ""};
    std::ostringstream desc;
    describe_multiset(a, classes, chosen, desc);
    rep.description = desc.str();
    reps.push_back(std::move(rep));
  };

  std::function<void(int, int, const std::vector<int>&)> descend =
      [&](int first_class, int left, const std::vector<int>& kernel) {
        if (left == 0) {
          emit(multiset, kernel);
          return;
        }
        for (int c = first_class; c < static_cast<int>(classes.size()); ++c) {
          if (classes[c].degree > left)
            continue;
          multiset.push_back(c);
          descend(c, left - classes[c].degree, intersect_sorted(kernel, classes[c].core_set));
          multiset.pop_back();
        }
      };

  for (int target = 1; target <= max_degree; ++target)
    descend(0, target, whole_kernel);
  return reps;
}

std::string Verdict::describe() const {
  std::ostringstream out;
  switch (kind) {
  case VerdictKind::TheoremDecided:
    out << "theorem-decided[" << citation << "]: "
        << (totally_closed ? "totally " : "not totally ") << k << "-closed";
    break;
  case VerdictKind::WitnessFound:
    out << "witness-found: degree " << witness->group.degree << " representation ("
        << witness->description << ") has " << k << "-closure of order " << closure_order;
    break;
  case VerdictKind::ExhaustedBound:
    out << "exhausted-bound: no witness among faithful representations of degree <= "
        << bound;
    break;
  }
  return out.str();
}

Verdict probe_totally_k_closed(const AbstractGroup& a, int k, int max_degree,
                               SearchLimits limits) {
  limits.closure_degree = std::max(limits.closure_degree, max_degree);
  Verdict verdict;
  verdict.k = k;
  for (FaithfulRep& rep : faithful_representations(a, max_degree)) {
    if (order(rep.group) != static_cast<std::uint64_t>(a.order()))
      throw DomainError("representation is not faithful");
    if (!is_k_closed(rep.group, k, limits)) {
      verdict.kind = VerdictKind::WitnessFound;
      verdict.closure_order = order(k_closure(rep.group, k, limits));
      verdict.witness = std::move(rep);
      return verdict;
    }
  }
  verdict.kind = VerdictKind::ExhaustedBound;
  verdict.bound = max_degree;
  return verdict;
}

Verdict classify_totally_k_closed(const GeneratedGroup& g, int k) {
  if (k < 1)
    throw DomainError("k must be at least 1");
  const SylowDecomposition syl = sylow_decomposition(g);
  Verdict verdict;
  verdict.kind = VerdictKind::TheoremDecided;
  verdict.k = k;
  verdict.citation = "sylow-elementary-abelian-criterion";
  verdict.totally_closed = true;
  for (std::size_t i = 0; i < syl.primes.size(); ++i) {
    const std::uint64_t p = syl.primes[i];
    std::uint64_t pk = 1;
    for (int j = 0; j < k; ++j)
      pk *= p;
    if (syl.orders[i] > pk)
      throw HypothesisNotMetError("Sylow " + std::to_string(p) + "-subgroup has order " +
                                  std::to_string(syl.orders[i]) + " > p^k = " +
                                  std::to_string(pk));
    if (syl.orders[i] == pk && is_elementary_abelian(syl.components[i], p))
      verdict.totally_closed = false;
  }
  return verdict;
}

namespace {

bool is_cyclic(const GeneratedGroup& g) {
  const StabilizerChain chain = build_chain(g);
  const std::uint64_t n = chain.order();
  for (const Perm& x : chain.elements())
    if (element_order(x) == n)
      return true;
  return false;
}

bool is_generalized_quaternion(const GeneratedGroup& g) {
  const StabilizerChain chain = build_chain(g);
  std::uint64_t n = chain.order();
  if (n < 8)
    return false;
  while (n % 2 == 0)
    n /= 2;
  if (n != 1)
    return false;
  if (is_cyclic(g))
    return false;
  // 2-groups with a unique involution are cyclic or generalized quaternion.
  int involutions = 0;
  for (const Perm& x : chain.elements())
    if (!x.is_identity() && compose(x, x).is_identity())
      ++involutions;
  return involutions == 1;
}

} // namespace

Verdict classify_totally_2_closed_nilpotent(const GeneratedGroup& g) {
  const SylowDecomposition syl = sylow_decomposition(g);
  Verdict verdict;
  verdict.kind = VerdictKind::TheoremDecided;
  verdict.k = 2;
  verdict.citation = "nilpotent-2-closed-classification";
  bool odd_cyclic = true;
  bool two_part_ok = true;
  for (std::size_t i = 0; i < syl.primes.size(); ++i) {
    if (syl.primes[i] == 2)
      two_part_ok = is_cyclic(syl.components[i]) || is_generalized_quaternion(syl.components[i]);
    else if (!is_cyclic(syl.components[i]))
      odd_cyclic = false;
  }
  verdict.totally_closed = odd_cyclic && two_part_ok;
  return verdict;
}

GeneratedGroup combine_sylow_witness(const SylowDecomposition& syl, std::uint64_t q,
                                     const GeneratedGroup& witness) {
  bool found = false;
  std::vector<GeneratedGroup> parts;
  for (std::size_t i = 0; i < syl.primes.size(); ++i) {
    if (syl.primes[i] == q) {
      if (order(witness) != syl.orders[i])
        throw DomainError("witness order does not match the Sylow subgroup");
      parts.push_back(witness);
      found = true;
    } else {
      parts.push_back(regular_representation(cayley_table(syl.components[i])));
    }
  }
  if (!found)
    throw DomainError("prime q does not divide the group order");
  return disjoint_union_product(parts);
}

bool verify_chnl_product(const GeneratedGroup& g, int k, const SearchLimits& limits) {
  const SylowDecomposition syl = sylow_decomposition(g);
  const GeneratedGroup lhs = k_closure(g, k, limits);
  std::vector<Perm> rhs_gens;
  for (const GeneratedGroup& component : syl.components) {
    const GeneratedGroup closed = k_closure(component, k, limits);
    rhs_gens.insert(rhs_gens.end(), closed.generators.begin(), closed.generators.end());
  }
  if (rhs_gens.empty())
    rhs_gens.push_back(Perm::identity(g.degree));
  const GeneratedGroup rhs(g.degree, std::move(rhs_gens));

  const StabilizerChain lhs_chain = build_chain(lhs);
  const StabilizerChain rhs_chain = build_chain(rhs);
  return lhs_chain.order() == rhs_chain.order() && is_subgroup_of(rhs, lhs_chain) &&
         is_subgroup_of(lhs, rhs_chain);
}

} // namespace cgt
