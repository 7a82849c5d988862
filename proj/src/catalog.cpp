#include "cgt/catalog.hpp"

#include "cgt/abstract.hpp"

namespace cgt {

namespace {

GeneratedGroup from_spec(const std::string& spec) { return parse_group_spec(spec); }

GeneratedGroup cyclic_regular(int n) {
  if (n == 1)
    return GeneratedGroup::trivial(1);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = (i + 1) % n + 1;
  return GeneratedGroup(n, {Perm(std::move(img))});
}

GeneratedGroup elementary_regular(int p, int k) {
  AbstractGroup a = AbstractGroup::cyclic(p);
  for (int i = 1; i < k; ++i)
    a = AbstractGroup::direct_product(a, AbstractGroup::cyclic(p));
  return regular_representation(a);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  auto add = [&](std::string name, std::string params, GeneratedGroup group,
                 std::uint64_t order_, bool abelian_, bool nilpotent_,
                 std::optional<int> n_of_g) {
    entries.push_back(CatalogEntry{std::move(name), std::move(params), std::move(group), order_,
                                   abelian_, nilpotent_, n_of_g});
  };

  add("Trivial", "degree=1", GeneratedGroup::trivial(1), 1, true, true, 0);
  for (int n = 2; n <= 12; ++n)
    add("Z" + std::to_string(n), "n=" + std::to_string(n), cyclic_regular(n),
        static_cast<std::uint64_t>(n), true, true, 1);

  add("Z2^2", "k=2", from_spec("4: (1 2), (3 4)"), 4, true, true, 2);
  add("Z2^3", "k=3", from_spec("6: (1 2), (3 4), (5 6)"), 8, true, true, 3);
  add("Z2^2-regular", "k=2", elementary_regular(2, 2), 4, true, true, 2);
  add("Z2^3-regular", "k=3", elementary_regular(2, 3), 8, true, true, 3);
  add("Z3^2", "k=2", from_spec("6: (1 2 3), (4 5 6)"), 9, true, true, 2);
  add("Z3^3", "k=3", from_spec("9: (1 2 3), (4 5 6), (7 8 9)"), 27, true, true, 3);
  add("Z3^2-regular", "k=2", elementary_regular(3, 2), 9, true, true, 2);
  add("Z3^3-regular", "k=3", elementary_regular(3, 3), 27, true, true, 3);

  add("Z2xZ4", "", from_spec("6: (1 2), (3 4 5 6)"), 8, true, true, 2);
  add("D8", "natural", from_spec("4: (1 2 3 4), (1 3)"), 8, false, true, std::nullopt);
  add("Q8", "regular", regular_representation(AbstractGroup::quaternion8()), 8, false, true,
      std::nullopt);
  add("D8xZ2", "k=1", from_spec("6: (1 2 3 4), (1 3), (5 6)"), 16, false, true,
      std::nullopt);
  add("D8xZ2^2", "k=2", from_spec("8: (1 2 3 4), (1 3), (5 6), (7 8)"), 32, false, true,
      std::nullopt);

  add("Z6-deg5", "", from_spec("5: (1 2 3)(4 5)"), 6, true, true, 1);
  add("Z2^2xZ3", "", from_spec("7: (1 2), (3 4), (5 6 7)"), 12, true, true, 2);
  add("Sym3", "natural", from_spec("3: (1 2 3), (1 2)"), 6, false, false, std::nullopt);

  return entries;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& entry : catalog())
    if (entry.name == name)
      return entry;
  throw DomainError("no catalog entry named " + name);
}

} // namespace cgt
