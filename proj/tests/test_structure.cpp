#include <doctest.h>

#include "cgt/structure.hpp"
#include "oracles.hpp"

using namespace cgt;

TEST_CASE("element orders") {
  CHECK(element_order(parse_cycles("(1 2 3 4 5 6)", 6)) == 6);
  CHECK(element_order(Perm::identity(4)) == 1);
  CHECK(element_order(parse_cycles("(1 2)(3 4 5)", 5)) == 6);
}

TEST_CASE("p-parts") {
  const Perm six = parse_cycles("(1 2 3 4 5 6)", 6);

  const Perm two_part = p_part(six, 2);
  CHECK(two_part == six.power(3));
  CHECK(two_part == parse_cycles("(1 4)(2 5)(3 6)", 6));

  const Perm three_part = p_part(six, 3);
  CHECK(three_part == six.power(4));
  CHECK(three_part == parse_cycles("(1 5 3)(2 6 4)", 6));

  // the parts commute and multiply back to the element
  CHECK(compose(two_part, three_part) == six);
  CHECK(compose(three_part, two_part) == six);

  CHECK(p_part(parse_cycles("(1 2 3)", 4), 2) == Perm::identity(4));
  CHECK_THROWS_AS(p_part(six, 4), DomainError);
}

TEST_CASE("p-part reconstruction across a catalog of elements") {
  for (const char* spec : {"6: (1 2 3 4 5 6)", "5: (1 2 3)(4 5)", "4: (1 2 3 4), (1 3)",
                           "7: (1 2), (3 4), (5 6 7)"}) {
    const GeneratedGroup g = parse_group_spec(spec);
    for (const Perm& x : build_chain(g).elements()) {
      Perm product = Perm::identity(g.degree);
      std::vector<Perm> parts;
      for (const auto& [p, e] : factorize(element_order(x))) {
        (void)e;
        parts.push_back(p_part(x, p));
        product = compose(product, parts.back());
      }
      CHECK(product == x);
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          CHECK(compose(parts[i], parts[j]) == compose(parts[j], parts[i]));
    }
  }
}

TEST_CASE("sylow decomposition of a six-cycle") {
  const GeneratedGroup z6 = parse_group_spec("6: (1 2 3 4 5 6)");
  const SylowDecomposition syl = sylow_decomposition(z6);
  REQUIRE(syl.primes == std::vector<std::uint64_t>{2, 3});
  CHECK(syl.orders == std::vector<std::uint64_t>{2, 3});
  CHECK(contains(syl.component(2), parse_cycles("(1 4)(2 5)(3 6)", 6)));
  CHECK(contains(syl.component(3), parse_cycles("(1 5 3)(2 6 4)", 6)));
}

TEST_CASE("sylow decomposition of a p-group is the group itself") {
  const GeneratedGroup d8 = parse_group_spec("4: (1 2 3 4), (1 3)");
  const SylowDecomposition syl = sylow_decomposition(d8);
  REQUIRE(syl.primes.size() == 1);
  CHECK(group_equal(syl.components[0], d8));
}

TEST_CASE("sym3 is not nilpotent") {
  const GeneratedGroup sym3 = parse_group_spec("3: (1 2 3), (1 2)");
  CHECK_THROWS_AS(sylow_decomposition(sym3), NotNilpotentError);
  CHECK_FALSE(is_nilpotent(sym3));
  CHECK(is_nilpotent(parse_group_spec("6: (1 2 3 4 5 6)")));
  CHECK(is_nilpotent(parse_group_spec("7: (1 2 3 4), (1 3), (5 6 7)")));
}

TEST_CASE("sylow components commute and have coprime orders") {
  for (const char* spec : {"5: (1 2 3)(4 5)", "7: (1 2), (3 4), (5 6 7)", "6: (1 2), (3 4 5 6)"}) {
    const SylowDecomposition syl = sylow_decomposition(parse_group_spec(spec));
    std::uint64_t product = 1;
    for (std::size_t i = 0; i < syl.components.size(); ++i) {
      product *= syl.orders[i];
      for (std::size_t j = i + 1; j < syl.components.size(); ++j)
        for (const Perm& x : syl.components[i].generators)
          for (const Perm& y : syl.components[j].generators)
            CHECK(compose(x, y) == compose(y, x));
    }
    CHECK(product == order(parse_group_spec(spec)));
  }
}

TEST_CASE("greedy bases") {
  CHECK(greedy_base(parse_group_spec("4: (1 2), (3 4)")) == std::vector<int>{1, 3});
  CHECK(greedy_base(parse_group_spec("4: (1 2 3 4)")).size() == 1);
  CHECK(greedy_base(parse_group_spec("6: (1 2 3 4), (1 3), (5 6)")).size() == 3);
  CHECK(greedy_base(GeneratedGroup::trivial(4)).empty());
}

TEST_CASE("exact base numbers match the subset oracle") {
  const std::vector<const char*> specs = {"4: (1 2), (3 4)", "6: (1 2), (3 4), (5 6)",
                                          "4: (1 2 3 4)", "4: (1 2 3 4), (1 3)",
                                          "5: (1 2 3)(4 5)", "3: (1 2 3), (1 2)"};
  for (const char* spec : specs) {
    const GeneratedGroup g = parse_group_spec(spec);
    CHECK(base_number(g) == oracle::brute_min_base(oracle::bfs_elements(g.generators), g.degree));
  }
  CHECK(base_number(parse_group_spec("6: (1 2), (3 4), (5 6)")) == 3);
  CHECK(base_number(parse_group_spec("6: (1 2 3 4), (1 3), (5 6)")) == 3);
  CHECK(base_number(parse_group_spec("4: (1 2 3 4)")) == 1);
  CHECK(base_number(GeneratedGroup::trivial(5)) == 0);
  CHECK_THROWS_AS(base_number(GeneratedGroup::trivial(17)), CapExceededError);
}

TEST_CASE("greedy length bounds the exact base number") {
  for (const char* spec : {"4: (1 2), (3 4)", "6: (1 2 3 4), (1 3), (5 6)", "5: (1 2 3)(4 5)",
                           "8: (1 2 3 4), (1 3), (5 6), (7 8)"}) {
    const GeneratedGroup g = parse_group_spec(spec);
    CHECK(base_number(g) <= static_cast<int>(greedy_base(g).size()));
  }
}

TEST_CASE("invariant factor counts") {
  CHECK(invariant_factor_count(parse_group_spec("6: (1 2 3 4 5 6)")) == 1);
  CHECK(invariant_factor_count(parse_group_spec("6: (1 2), (3 4 5 6)")) == 2);
  CHECK(invariant_factor_count(parse_group_spec("6: (1 2), (3 4), (5 6)")) == 3);
  CHECK(invariant_factor_count(GeneratedGroup::trivial(2)) == 0);
  CHECK_THROWS_AS(invariant_factor_count(parse_group_spec("4: (1 2 3 4), (1 3)")),
                  NonAbelianInputError);
}

TEST_CASE("elementary abelian detection") {
  CHECK(is_elementary_abelian(parse_group_spec("4: (1 2), (3 4)"), 2));
  CHECK_FALSE(is_elementary_abelian(parse_group_spec("4: (1 2 3 4)"), 2));
  CHECK(is_elementary_abelian(GeneratedGroup::trivial(3), 5));
  CHECK_FALSE(is_elementary_abelian(parse_group_spec("6: (1 2 3), (4 5 6)"), 2));
  CHECK(is_elementary_abelian(parse_group_spec("6: (1 2 3), (4 5 6)"), 3));
}

TEST_CASE("primes and factorization") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(12));
  CHECK(factorize(12) ==
        std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {3, 1}});
  CHECK(factorize(1).empty());
}
