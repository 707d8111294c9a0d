#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gyro/errors.hpp"
#include "gyro/finite_group.hpp"
#include "gyro/group_registry.hpp"
#include "gyro/isomorphism.hpp"
#include "gyro/permutation.hpp"
#include "oracles.hpp"

using namespace gyro;

namespace {

void check_group_axioms(const FiniteGroup& g) {
  const auto n = static_cast<Index>(g.order());
  for (Index x = 0; x < n; ++x) {
    REQUIRE(g.mul(g.identity(), x) == x);
    REQUIRE(g.mul(x, g.identity()) == x);
    REQUIRE(g.mul(x, g.inv(x)) == g.identity());
    REQUIRE(g.mul(g.inv(x), x) == g.identity());
    REQUIRE(oracle::slow_power(g, x, g.element_order(x)) == g.identity());
    for (std::size_t m = 1; m < g.element_order(x); ++m)
      REQUIRE(oracle::slow_power(g, x, m) != g.identity());
  }
  REQUIRE(is_associative(g.table()));
}

}  // namespace

TEST_CASE("compose follows the left-to-right convention") {
  const auto p = Permutation::parse("(0 1)");
  const auto id = Permutation(3);
  const auto q = Permutation::from_cycles("(1 2)", 3);
  const auto pp = Permutation::from_cycles("(0 1)", 3);

  CHECK(compose(id, pp) == pp);
  CHECK(compose(pp, pp.inverse()).is_identity());

  // raw-array product over all of S3 against compose
  for (const auto& a : oracle::all_permutations(3))
    for (const auto& b : oracle::all_permutations(3)) {
      const Permutation pa(std::vector<Point>(a.begin(), a.end()));
      const Permutation pb(std::vector<Point>(b.begin(), b.end()));
      const auto expected = oracle::then(a, b);
      CHECK(std::equal(expected.begin(), expected.end(), compose(pa, pb).images().begin()));
    }

  const auto r = compose(pp, q);
  CHECK(r.order() == 3);
  CHECK(r.to_cycle_string() == "(0 2 1)");
  CHECK(p.degree() == 2);
}

TEST_CASE("compose rejects mixed degrees") {
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST_CASE("cycle notation parsing") {
  CHECK(Permutation::from_cycles(" ( 0  1 ) (2 3)", 4) == Permutation::from_cycles("(0 1)(2 3)", 4));
  CHECK(Permutation::from_cycles("e", 5).is_identity());
  CHECK(Permutation::parse("e").degree() == 1);
  CHECK(Permutation::parse("(0 3)").degree() == 4);
  // products of overlapping cycles compose left to right
  CHECK(Permutation::from_cycles("(0 1)(1 2)", 3) == Permutation::from_cycles("(0 2 1)", 3));

  CHECK_THROWS_AS(Permutation::from_cycles("(0 1", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(0 x)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(0 0)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(0 5)", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("0 1", 3), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("", 3), ParseError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("cycle strings parse back to the same permutation") {
  for (const auto& a : oracle::all_permutations(5)) {
    const Permutation p(std::vector<Point>(a.begin(), a.end()));
    CHECK(Permutation::from_cycles(p.to_cycle_string(), 5) == p);
  }
}

TEST_CASE("group closure from generators") {
  SUBCASE("S3") {
    const Permutation gens[] = {Permutation::from_cycles("(0 1)", 3), Permutation::from_cycles("(0 1 2)", 3)};
    auto g = FiniteGroup::from_generators(gens);
    CHECK(g.order() == 6);
    CHECK_FALSE(g.is_abelian());
  }
  SUBCASE("trivial") {
    const Permutation gens[] = {Permutation(3)};
    auto g = FiniteGroup::from_generators(gens);
    CHECK(g.order() == 1);
    CHECK(g.element(0).is_identity());
  }
  SUBCASE("dihedral of order 8") {
    const Permutation gens[] = {Permutation::from_cycles("(0 1 2 3)", 4), Permutation::from_cycles("(0 2)", 4)};
    auto g = FiniteGroup::from_generators(gens);
    CHECK(g.order() == 8);
    CHECK(g.order_histogram() == std::map<std::size_t, std::size_t>{{1, 1}, {2, 5}, {4, 2}});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(FiniteGroup::from_generators(std::vector<Permutation>{}), std::invalid_argument);
    const Permutation mixed[] = {Permutation(3), Permutation(4)};
    CHECK_THROWS_AS(FiniteGroup::from_generators(mixed), std::invalid_argument);
    const Permutation s5[] = {Permutation::from_cycles("(0 1)", 5), Permutation::from_cycles("(0 1 2 3 4)", 5)};
    CHECK_THROWS_AS(FiniteGroup::from_generators(s5, 100), CapExceeded);
  }
}

TEST_CASE("elements are sorted by one-line notation with the identity first") {
  auto g = named_group("S4");
  CHECK(g.element(g.identity()).is_identity());
  CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
}

TEST_CASE("registry groups satisfy the group axioms") {
  const std::pair<const char*, std::size_t> expected[] = {
      {"S1", 1}, {"S2", 2}, {"S3", 6}, {"S4", 24}, {"S5", 120}, {"A3", 3}, {"A4", 12}, {"A5", 60},
      {"D2", 4}, {"D3", 6}, {"D4", 8}, {"D6", 12}, {"C1", 1}, {"C4", 4}, {"C7", 7}, {"Q8", 8},
  };
  for (auto [name, order] : expected) {
    CAPTURE(name);
    auto g = named_group(name);
    CHECK(g.order() == order);
    check_group_axioms(g);
  }
  CHECK(named_group("D2").is_abelian());
  CHECK(named_group("Q8").order_histogram() == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}});
  CHECK_THROWS_AS(named_group("X4"), ParseError);
  CHECK_THROWS_AS(named_group("S"), ParseError);
  CHECK_THROWS_AS(named_group("S0"), ParseError);
  CHECK_THROWS_AS(named_group("S6"), CapExceeded);
  CHECK(named_group("S6", 1000).order() == 720);
}

TEST_CASE("group specs") {
  CHECK(parse_group_spec("gens:(0 1),(0 1 2 3)").order() == 24);
  CHECK(parse_group_spec("gens:(0 1)(2 3), (0 2)(1 3)").is_abelian());
  CHECK(parse_group_spec(" D4 ").order() == 8);
  CHECK_THROWS_AS(parse_group_spec("gens:(0 1),"), ParseError);
  CHECK(split_top_level("(0 1):1,(0 1 2):2") == std::vector<std::string>{"(0 1):1", "(0 1 2):2"});
}

TEST_CASE("conjugate") {
  auto g = named_group("S3");
  for (Index x = 0; x < g.order(); ++x) {
    CHECK(g.conjugate(x, g.identity()) == x);
    CHECK(g.conjugate(g.identity(), x) == g.identity());
    for (Index a = 0; a < g.order(); ++a)
      CHECK(g.conjugate(g.conjugate(x, a), g.inv(a)) == x);
  }
  const Index t = *g.index_of(Permutation::from_cycles("(0 1)", 3));
  const Index c = *g.index_of(Permutation::from_cycles("(0 1 2)", 3));
  // brute force: (0 1 2)^-1 (0 1) (0 1 2) on raw arrays
  const auto expected = oracle::then(oracle::then({2, 0, 1}, {1, 0, 2}), {1, 2, 0});
  const Index conj = g.conjugate(t, c);
  CHECK(std::equal(expected.begin(), expected.end(), g.element(conj).images().begin()));
  CHECK(g.element_order(conj) == 2);
  CHECK(conj != t);
}

TEST_CASE("conjugacy classes") {
  auto sizes = [](const FiniteGroup& g) {
    std::multiset<std::size_t> s;
    for (const auto& c : conjugacy_classes(g))
      s.insert(c.size());
    return s;
  };
  CHECK(sizes(named_group("C4")) == std::multiset<std::size_t>{1, 1, 1, 1});
  CHECK(sizes(named_group("S3")) == std::multiset<std::size_t>{1, 2, 3});
  // S4: e, (2), (2,2), (3), (4) have 1, 6, 3, 8, 6 members
  CHECK(sizes(named_group("S4")) == std::multiset<std::size_t>{1, 3, 6, 6, 8});

  for (const char* name : {"S4", "A4", "D4", "Q8", "D6", "A5"}) {
    auto g = named_group(name);
    std::vector<int> seen(g.order(), 0);
    for (const auto& c : conjugacy_classes(g)) {
      CHECK(g.order() % c.size() == 0);
      for (Index x : c)
        ++seen[x];
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; }));
    CHECK(conjugacy_classes(g).front() == std::vector<Index>{g.identity()});
  }
}

TEST_CASE("centralizers") {
  auto g = named_group("S3");
  CHECK(centralizer(g, g.identity()).size() == 6);
  CHECK(centralizer(g, *g.index_of(Permutation::from_cycles("(0 1)", 3))).size() == 2);
  CHECK(centralizer(g, *g.index_of(Permutation::from_cycles("(0 1 2)", 3))).size() == 3);

  for (const char* name : {"S4", "D4", "Q8", "A4"}) {
    auto h = named_group(name);
    for (Index x = 0; x < h.order(); ++x) {
      const auto c = centralizer(h, x);
      // a subgroup containing <x>
      CHECK(subgroup_generated(h, c) == c);
      const Index gen[] = {x};
      for (Index p : subgroup_generated(h, gen))
        CHECK(std::binary_search(c.begin(), c.end(), p));
    }
  }
}

TEST_CASE("tables_isomorphic") {
  auto s3 = named_group("S3").table();
  auto c6 = named_group("C6").table();
  auto d3 = named_group("D3").table();

  auto self = tables_isomorphic(s3, s3);
  REQUIRE(self);
  std::vector<Index> identity(6);
  std::iota(identity.begin(), identity.end(), Index{0});
  CHECK(*self.mapping == identity);

  auto cert = tables_isomorphic(s3, d3);
  REQUIRE(cert);
  CHECK(is_isomorphism(s3, d3, *cert.mapping));
  CHECK_FALSE(tables_isomorphic(s3, c6));
  CHECK_FALSE(tables_isomorphic(s3, named_group("C4").table()));
  CHECK(tables_isomorphic(s3, named_group("C4").table()).reason.find("orders differ") != std::string::npos);

  CHECK(tables_isomorphic(named_group("D4").table(), parse_group_spec("gens:(0 1 2 3),(1 3)").table()));
  CHECK_FALSE(tables_isomorphic(named_group("D4").table(), named_group("Q8").table()));
  CHECK(tables_isomorphic(named_group("D2").table(), parse_group_spec("gens:(0 1),(2 3)").table()));

  // agreement with exhaustive enumeration over all bijections for small tables
  const char* names[] = {"C6", "S3", "D3", "C4", "D2"};
  for (const char* a : names)
    for (const char* b : names) {
      auto ta = named_group(a).table(), tb = named_group(b).table();
      CAPTURE(a);
      CAPTURE(b);
      CHECK(static_cast<bool>(tables_isomorphic(ta, tb)) == oracle::isomorphic_by_enumeration(ta, tb));
    }
}

TEST_CASE("identify_small_group") {
  CHECK(identify_small_group(named_group("A3")) == "C3");
  CHECK(identify_small_group(named_group("D3")) == "S3");
  CHECK(identify_small_group(named_group("D2")) == "C2xC2");
  CHECK(identify_small_group(parse_group_spec("gens:(0 1 2),(1 2 3)")) == "A4");
  CHECK(identify_small_group(named_group("Q8")) == "Q8");
  CHECK_FALSE(identify_small_group(parse_group_spec("gens:(0 1),(2 3),(4 5)")).has_value());
}
