#include "cgt/abstract.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cgt {

AbstractGroup::AbstractGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels,
                             std::vector<int> generators)
    : order_(static_cast<int>(table.size())),
      table_(std::move(table)),
      labels_(std::move(labels)),
      generators_(std::move(generators)) {
  if (order_ < 1)
    throw DomainError("abstract group must have at least one element");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != order_)
      throw DomainError("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= order_)
        throw DomainError("multiplication table entry out of range");
  }
  if (static_cast<int>(labels_.size()) != order_)
    throw DomainError("label count does not match order");
  for (int g : generators_)
    if (g < 0 || g >= order_)
      throw DomainError("generator index out of range");

  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int x = 0; x < order_ && ok; ++x)
      ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0)
    throw DomainError("multiplication table has no identity");

  inverse_.assign(order_, -1);
  for (int x = 0; x < order_; ++x) {
    for (int y = 0; y < order_; ++y) {
      if (table_[x][y] == identity_ && table_[y][x] == identity_) {
        inverse_[x] = y;
        break;
      }
    }
    if (inverse_[x] < 0)
      throw DomainError("multiplication table lacks an inverse");
  }

  if (order_ <= kDefaultTableOrderCap) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw DomainError("multiplication table is not associative");
  }
}

int AbstractGroup::element_order(int a) const {
  int x = a;
  int n = 1;
  while (x != identity_) {
    x = mult(x, a);
    ++n;
  }
  return n;
}

AbstractGroup AbstractGroup::cyclic(int n) {
  if (n < 1)
    throw DomainError("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = "g^" + std::to_string(a);
    for (int b = 0; b < n; ++b)
      table[a][b] = (a + b) % n;
  }
  std::vector<int> gens;
  if (n > 1)
    gens.push_back(1);
  return AbstractGroup(std::move(table), std::move(labels), std::move(gens));
}

AbstractGroup AbstractGroup::direct_product(const AbstractGroup& a, const AbstractGroup& b) {
  const int m = a.order() * b.order();
  auto index = [&](int x, int y) { return x * b.order() + y; };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1) {
      labels[index(x1, y1)] = "(" + a.label(x1) + "," + b.label(y1) + ")";
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          table[index(x1, y1)][index(x2, y2)] = index(a.mult(x1, x2), b.mult(y1, y2));
    }
  std::vector<int> gens;
  for (int g : a.generators())
    gens.push_back(index(g, b.identity()));
  for (int g : b.generators())
    gens.push_back(index(a.identity(), g));
  return AbstractGroup(std::move(table), std::move(labels), std::move(gens));
}

AbstractGroup AbstractGroup::quaternion8() {
  // Elements 0..7 = 1, -1, i, -i, j, -j, k, -k; each index is
  // (unit u in {1,i,j,k}) * 2 + sign.
  static const int unit_prod[4][4] = {
      {0, 1, 2, 3}, // 1 * x
      {1, 0, 3, 2}, // i * x  (units)
      {2, 3, 0, 1}, // j * x
      {3, 2, 1, 0}, // k * x
  };
  static const int unit_sign[4][4] = {
      {0, 0, 0, 0},
      {0, 1, 0, 1}, // ii=-1, ij=k, ik=-j
      {0, 1, 1, 0}, // ji=-k, jj=-1, jk=i
      {0, 0, 1, 1}, // ki=j, kj=-i, kk=-1
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, sx = x % 2;
      const int uy = y / 2, sy = y % 2;
      const int u = unit_prod[ux][uy];
      const int s = (sx + sy + unit_sign[ux][uy]) % 2;
      table[x][y] = u * 2 + s;
    }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return AbstractGroup(std::move(table), std::move(labels), {2, 4});
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

AbstractGroup cayley_table(const GeneratedGroup& g, int order_cap) {
  StabilizerChain chain = build_chain(g);
  if (chain.order() > static_cast<std::uint64_t>(order_cap))
    throw CapExceededError("group order " + std::to_string(chain.order()) +
                           " exceeds Cayley table cap " + std::to_string(order_cap));
  std::vector<Perm> elems = chain.elements();
  std::sort(elems.begin(), elems.end());

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index[elems[i].images()] = static_cast<int>(i);

  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    labels[a] = format_cycles(elems[a]);
    for (int b = 0; b < m; ++b)
      table[a][b] = index.at(compose(elems[a], elems[b]).images());
  }
  std::vector<int> gens;
  for (const Perm& s : g.generators)
    gens.push_back(index.at(s.images()));
  return AbstractGroup(std::move(table), std::move(labels), std::move(gens));
}

GeneratedGroup regular_representation(const AbstractGroup& a) {
  const int m = a.order();
  std::vector<Perm> gens;
  for (int s : a.generators()) {
    std::vector<int> img(m);
    for (int x = 0; x < m; ++x)
      img[x] = a.mult(x, s) + 1;
    gens.emplace_back(std::move(img));
  }
  if (gens.empty())
    gens.push_back(Perm::identity(m));
  return GeneratedGroup(m, std::move(gens));
}

Subgroup generated_subgroup(const AbstractGroup& a, const std::vector<int>& seed) {
  std::set<int> members{a.identity()};
  std::vector<int> queue{a.identity()};
  for (int s : seed)
    if (members.insert(s).second)
      queue.push_back(s);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int s : seed) {
      const int next = a.mult(queue[k], s);
      if (members.insert(next).second)
        queue.push_back(next);
    }
  }
  Subgroup h;
  h.elements.assign(members.begin(), members.end());
  return h;
}

std::vector<Subgroup> subgroups(const AbstractGroup& a, int order_cap) {
  if (a.order() > order_cap)
    throw CapExceededError("group order " + std::to_string(a.order()) +
                           " exceeds subgroup lattice cap " + std::to_string(order_cap));
  std::set<std::vector<int>> known;
  known.insert(generated_subgroup(a, {}).elements);
  for (int x = 0; x < a.order(); ++x)
    known.insert(generated_subgroup(a, {x}).elements);

  // Close the collection under pairwise join.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(known.begin(), known.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> seed = snapshot[i];
        seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
        auto joined = generated_subgroup(a, seed).elements;
        if (known.insert(std::move(joined)).second)
          grew = true;
      }
    }
  }

  std::vector<Subgroup> result;
  for (const auto& elems : known)
    result.push_back(Subgroup{elems});
  std::sort(result.begin(), result.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order())
      return x.order() < y.order();
    return x.elements < y.elements;
  });
  return result;
}

Subgroup conjugate_subgroup(const AbstractGroup& a, const Subgroup& h, int g) {
  Subgroup result;
  result.elements.reserve(h.elements.size());
  const int gi = a.inverse(g);
  for (int x : h.elements)
    result.elements.push_back(a.mult(a.mult(gi, x), g));
  std::sort(result.elements.begin(), result.elements.end());
  return result;
}

Subgroup core(const AbstractGroup& a, const Subgroup& h) {
  std::vector<int> current = h.elements;
  for (int g = 0; g < a.order(); ++g) {
    const Subgroup conj = conjugate_subgroup(a, h, g);
    std::vector<int> next;
    std::set_intersection(current.begin(), current.end(), conj.elements.begin(),
                          conj.elements.end(), std::back_inserter(next));
    current = std::move(next);
    if (current.size() == 1)
      break;
  }
  return Subgroup{std::move(current)};
}

namespace {

// Right cosets Hx in order of smallest member; returns (coset id per
// element, representative per coset).
std::pair<std::vector<int>, std::vector<int>> coset_table(const AbstractGroup& a,
                                                          const Subgroup& h) {
  const int m = a.order();
  std::vector<int> coset_of(m, -1);
  std::vector<int> reps;
  for (int x = 0; x < m; ++x) {
    if (coset_of[x] >= 0)
      continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int hh : h.elements)
      coset_of[a.mult(hh, x)] = id;
  }
  return {std::move(coset_of), std::move(reps)};
}

} // namespace

GeneratedGroup combined_coset_action(const AbstractGroup& a, const std::vector<Subgroup>& hs) {
  if (hs.empty())
    throw DomainError("combined coset action needs at least one subgroup");
  std::vector<std::vector<int>> coset_of, reps;
  std::vector<int> offsets;
  int degree = 0;
  for (const Subgroup& h : hs) {
    auto [cosets, rep] = coset_table(a, h);
    offsets.push_back(degree);
    degree += static_cast<int>(rep.size());
    coset_of.push_back(std::move(cosets));
    reps.push_back(std::move(rep));
  }
  std::vector<Perm> gens;
  for (int s : a.generators()) {
    std::vector<int> img(degree);
    for (std::size_t b = 0; b < hs.size(); ++b)
      for (std::size_t c = 0; c < reps[b].size(); ++c)
        img[offsets[b] + c] = offsets[b] + coset_of[b][a.mult(reps[b][c], s)] + 1;
    gens.emplace_back(std::move(img));
  }
  if (gens.empty())
    gens.push_back(Perm::identity(degree));
  return GeneratedGroup(degree, std::move(gens));
}

GeneratedGroup coset_action(const AbstractGroup& a, const Subgroup& h) {
  return combined_coset_action(a, {h});
}

} // namespace cgt
