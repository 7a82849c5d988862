#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "cgt/closure.hpp"
#include "oracles.hpp"

using namespace cgt;

TEST_CASE("tuple orbit colorings") {
  const GeneratedGroup klein = parse_group_spec("4: (1 2), (3 4)");
  const OrbitColoring coloring = tuple_orbits(klein, 2);
  const std::set<std::vector<int>> expected = {{1, 3}, {1, 4}, {2, 3}, {2, 4}};
  CHECK(oracle::tuple_orbit(oracle::bfs_elements(klein.generators), {1, 3}) == expected);
  const std::int32_t color = coloring.color_of_tuple({1, 3});
  for (const std::vector<int>& t : expected)
    CHECK(coloring.color_of_tuple(t) == color);
  CHECK(coloring.color_of_tuple({1, 2}) != color);

  // trivial group: every tuple is its own color
  const OrbitColoring trivial = tuple_orbits(GeneratedGroup::trivial(3), 2);
  CHECK(trivial.color_count() == 9);

  const GeneratedGroup v6 = parse_group_spec("6: (3 4)(5 6), (1 2)(5 6)");
  const OrbitColoring c6 = tuple_orbits(v6, 2);
  const auto orbit13 = oracle::tuple_orbit(oracle::bfs_elements(v6.generators), {1, 3});
  CHECK(orbit13 == std::set<std::vector<int>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  for (const std::vector<int>& t : orbit13)
    CHECK(c6.color_of_tuple(t) == c6.color_of_tuple({1, 3}));
}

TEST_CASE("coloring matches the orbit partition oracle") {
  for (const char* spec : {"4: (1 2 3 4), (1 3)", "5: (1 2 3)(4 5)", "4: (1 2), (3 4)"}) {
    const GeneratedGroup g = parse_group_spec(spec);
    const std::vector<Perm> elems = oracle::bfs_elements(g.generators);
    for (int k = 1; k <= 2; ++k) {
      const OrbitColoring coloring = tuple_orbits(g, k);
      int orbit_count = 0;
      std::set<std::int64_t> seen;
      for (std::int64_t code = 0; code < coloring.table_size(); ++code) {
        if (seen.count(code))
          continue;
        ++orbit_count;
        // color id is the smallest encoded member of the orbit
        for (const std::vector<int>& member :
             oracle::tuple_orbit(elems, coloring.decode(code))) {
          const std::int64_t member_code = coloring.encode(member);
          seen.insert(member_code);
          CHECK(coloring.color_of_code(member_code) == static_cast<std::int32_t>(code));
        }
      }
      CHECK(coloring.color_count() == orbit_count);
    }
  }
}

TEST_CASE("k-closure of the worked six-point group") {
  const GeneratedGroup v6 = parse_group_spec("6: (3 4)(5 6), (1 2)(5 6)");
  const GeneratedGroup closure = k_closure(v6, 2);
  CHECK(order(closure) == 8);
  CHECK(group_equal(closure, parse_group_spec("6: (1 2), (3 4), (5 6)")));
  CHECK(is_subgroup_of(v6, build_chain(closure)));
}

TEST_CASE("regular groups are their own 2-closure") {
  const GeneratedGroup z4 = parse_group_spec("4: (1 2 3 4)");
  CHECK(group_equal(k_closure(z4, 2), z4));
  CHECK(is_k_closed(z4, 2));
}

namespace {

// Full symmetric group on a subset of the domain, fixing everything else.
GeneratedGroup symmetric_on(int degree, const std::vector<int>& support) {
  std::vector<Perm> gens{Perm::identity(degree)};
  if (support.size() >= 2) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    img[support[0] - 1] = support[1];
    img[support[1] - 1] = support[0];
    gens.emplace_back(img);
  }
  if (support.size() >= 3) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    for (std::size_t i = 0; i + 1 < support.size(); ++i)
      img[support[i] - 1] = support[i + 1];
    img[support.back() - 1] = support[0];
    gens.emplace_back(img);
  }
  return GeneratedGroup(degree, std::move(gens));
}

} // namespace

TEST_CASE("1-closure is the product of symmetric groups on the orbits") {
  const GeneratedGroup g = parse_group_spec("4: (1 2 3)");
  const GeneratedGroup closure = k_closure(g, 1);
  CHECK(order(closure) == 6);
  CHECK(group_equal(closure, parse_group_spec("4: (1 2), (1 2 3)")));

  const GeneratedGroup z6d5 = parse_group_spec("5: (1 2 3)(4 5)");
  CHECK(order(k_closure(z6d5, 1)) == 12);
  CHECK_FALSE(is_k_closed(z6d5, 1));
  CHECK(group_equal(k_closure(k_closure(z6d5, 1), 1), k_closure(z6d5, 1)));

  for (const char* spec : {"5: (1 2 3)(4 5)", "4: (1 2), (3 4)", "6: (1 2 3 4 5 6)",
                           "6: (1 2 3 4), (1 3), (5 6)", "3: ()"}) {
    const GeneratedGroup h = parse_group_spec(spec);
    std::vector<Perm> gens;
    for (const std::vector<int>& orbit : orbits(h))
      for (const Perm& s : symmetric_on(h.degree, orbit).generators)
        gens.push_back(s);
    CHECK(group_equal(k_closure(h, 1), GeneratedGroup(h.degree, gens)));
  }
}

TEST_CASE("symmetric groups are k-closed") {
  const GeneratedGroup sym3 = parse_group_spec("3: (1 2 3), (1 2)");
  for (int k = 1; k <= 3; ++k) {
    CHECK(group_equal(k_closure(sym3, k), sym3));
    CHECK(is_k_closed(sym3, k));
  }
}

TEST_CASE("naive closure agrees with the backtracking engine") {
  for (const char* spec :
       {"4: (1 2), (3 4)", "4: (1 2)(3 4)", "3: ()", "6: (3 4)(5 6), (1 2)(5 6)"}) {
    const GeneratedGroup g = parse_group_spec(spec);
    for (int k = 1; k <= 2; ++k) {
      const GeneratedGroup fast = k_closure(g, k);
      const GeneratedGroup naive = k_closure_naive(g, k);
      CHECK(group_equal(fast, naive));
      if (k >= 2) {
        // identical reduced generating sets: both engines accept in the
        // same lexicographic order (k = 1 takes the analytic route)
        CHECK(fast.generators.size() == naive.generators.size());
        for (std::size_t i = 0; i < fast.generators.size(); ++i)
          CHECK(fast.generators[i] == naive.generators[i]);
      }
    }
  }
  CHECK(order(k_closure_naive(parse_group_spec("4: (1 2), (3 4)"), 2)) == 4);
  CHECK(group_equal(k_closure_naive(GeneratedGroup::trivial(3), 1), GeneratedGroup::trivial(3)));
}

TEST_CASE("closedness witnesses") {
  CHECK_FALSE(is_k_closed(parse_group_spec("6: (3 4)(5 6), (1 2)(5 6)"), 2));
  // (1 2) preserves every 2-orbit of the six-point group
  const GeneratedGroup v6 = parse_group_spec("6: (3 4)(5 6), (1 2)(5 6)");
  const OrbitColoring coloring = tuple_orbits(v6, 2);
  const Perm witness = parse_cycles("(1 2)", 6);
  for (std::int64_t code = 0; code < coloring.table_size(); ++code) {
    const std::vector<int> t = coloring.decode(code);
    CHECK(coloring.color_of_tuple(apply_to_tuple(witness, t)) == coloring.color_of_tuple(t));
  }
  CHECK_FALSE(contains(v6, witness));
}

TEST_CASE("closure chain and idempotence") {
  for (const char* spec : {"4: (1 2), (3 4)", "5: (1 2 3)(4 5)", "4: (1 2 3 4), (1 3)"}) {
    const GeneratedGroup g = parse_group_spec(spec);
    for (int k = 2; k <= 3; ++k) {
      const GeneratedGroup ck = k_closure(g, k);
      const GeneratedGroup cprev = k_closure(g, k - 1);
      CHECK(is_subgroup_of(g, build_chain(ck)));
      CHECK(is_subgroup_of(ck, build_chain(cprev)));
      CHECK(group_equal(k_closure(ck, k), ck));
    }
  }
}

TEST_CASE("degenerate arity k >= n") {
  const GeneratedGroup z3 = parse_group_spec("3: (1 2 3)");
  for (int k = 3; k <= 5; ++k) {
    CHECK(group_equal(k_closure(z3, k), k_closure_naive(z3, k)));
    CHECK(is_k_closed(z3, k));
  }
  const GeneratedGroup one = GeneratedGroup::trivial(1);
  CHECK(group_equal(k_closure(one, 4), one));
  CHECK(is_k_closed(one, 2));
}

TEST_CASE("random groups: both engines agree and closures are sound") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    const int degree = 2 + static_cast<int>(rng() % 4);
    std::vector<int> img(degree);
    for (int j = 0; j < degree; ++j)
      img[j] = j + 1;
    std::shuffle(img.begin(), img.end(), rng);
    const GeneratedGroup g(degree, {Perm(img)});
    for (int k = 1; k <= 2; ++k) {
      const GeneratedGroup fast = k_closure(g, k);
      REQUIRE(group_equal(fast, k_closure_naive(g, k)));
      REQUIRE(is_subgroup_of(g, build_chain(fast)));
      REQUIRE(is_k_closed(g, k) == (order(fast) == order(g)));
    }
  }
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(k_closure(GeneratedGroup::trivial(13), 2), CapExceededError);
  CHECK_THROWS_AS(k_closure_naive(GeneratedGroup::trivial(9), 2), CapExceededError);
  SearchLimits tight;
  tight.tuple_table = 10;
  CHECK_THROWS_AS(tuple_orbits(parse_group_spec("4: (1 2 3 4)"), 2, tight), CapExceededError);
  CHECK_THROWS_AS(k_closure(parse_group_spec("4: (1 2 3 4)"), 0), DomainError);
}
