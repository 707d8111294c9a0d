#include <doctest.h>

#include <memory>

#include "gyro/class_functions.hpp"
#include "gyro/errors.hpp"
#include "gyro/gen_product.hpp"
#include "gyro/group_registry.hpp"
#include "gyro/isomorphism.hpp"
#include "gyro/loop.hpp"
#include "gyro/verify.hpp"
#include "oracles.hpp"

using namespace gyro;

namespace {

// x' with (x o y) o z = x' o (y o z), by scanning every candidate
std::vector<Index> gyration_by_search(const OpTable& t, Index y, Index z) {
  std::vector<Index> out(t.order());
  for (Index x = 0; x < t.order(); ++x) {
    std::size_t hits = 0;
    for (Index c = 0; c < t.order(); ++c)
      if (t(c, t(y, z)) == t(t(x, y), z)) {
        out[x] = c;
        ++hits;
      }
    REQUIRE(hits == 1);
  }
  return out;
}

OpTable opposite(const FiniteGroup& g) {
  std::vector<Index> cells(g.order() * g.order());
  for (Index x = 0; x < g.order(); ++x)
    for (Index y = 0; y < g.order(); ++y)
      cells[x * g.order() + y] = g.mul(y, x);
  return OpTable(g.order(), g.identity(), cells);
}

}  // namespace

TEST_CASE("solved gyrations match the closed form and direct search") {
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4"}) {
    CAPTURE(name);
    auto g = named_group(name);
    auto p = std::make_shared<const RClassPartition>(g);
    for (auto e = enumerate_cafs(p); auto k = e.next();) {
      auto loop = deformed_loop(g, *k);
      for (Index y = 0; y < g.order(); ++y)
        for (Index z = 0; z < g.order(); ++z) {
          auto solved = solve_gyration(loop.table(), y, z);
          CHECK(solved.action == closed_form_gyration(g, *k, y, z).action);
          if (g.order() <= 8)
            CHECK(solved.action == gyration_by_search(loop.table(), y, z));
          // inner: conjugation by the closed-form conjugator
          const Index a = closed_form_conjugator(g, *k, y, z);
          for (Index x = 0; x < g.order(); ++x)
            CHECK(solved.action[x] == g.conjugate(x, a));
        }
      for (Index y = 0; y < g.order(); ++y)
        CHECK(solve_gyration(loop.table(), y, loop.right_inverse(y)).is_identity());
    }
  }
}

TEST_CASE("associative exactly when every gyration is trivial") {
  for (const char* name : {"S3", "D4", "Q8", "A4"}) {
    auto g = named_group(name);
    auto p = std::make_shared<const RClassPartition>(g);
    for (auto e = enumerate_cafs(p); auto k = e.next();) {
      auto loop = deformed_loop(g, *k);
      bool all_trivial = true;
      for (const auto& f : all_gyrations(loop.table()))
        all_trivial = all_trivial && f.is_identity();
      CHECK(is_associative(loop.table()) == all_trivial);
      auto report = verify_right_gyrogroup(loop.table());
      CHECK(report.associative == all_trivial);
      CHECK((report.gyration_group_order == 1) == all_trivial);
    }
  }
}

TEST_CASE("every deformed loop is a right gyrogroup") {
  for (const char* name : {"S3", "D4", "Q8", "A4", "S4"}) {
    auto g = named_group(name);
    auto p = std::make_shared<const RClassPartition>(g);
    for (auto e = enumerate_cafs(p); auto k = e.next();) {
      auto report = verify_right_gyrogroup(deformed_loop(g, *k).table(), {.uniqueness_sweep = g.order() <= 8});
      CHECK(report.is_right_gyrogroup());
      CHECK(report.witnesses.empty());
    }
  }
}

TEST_CASE("is_automorphism") {
  auto g = named_group("S3");
  std::vector<Index> id(g.order());
  for (Index x = 0; x < g.order(); ++x)
    id[x] = x;
  CHECK(is_automorphism(g.table(), id));
  std::vector<Index> swap = id;
  std::swap(swap[1], swap[3]);
  auto r = is_automorphism(g.table(), swap);
  REQUIRE_FALSE(r);
  REQUIRE(r.witness);
  const Index x = r.witness->x, y = *r.witness->h;
  CHECK(swap[g.mul(x, y)] != g.mul(swap[x], swap[y]));
}

TEST_CASE("a Latin square without a right identity is reported") {
  auto g = named_group("S3");
  // x o y = y x^-1
  std::vector<Index> cells(36);
  for (Index x = 0; x < 6; ++x)
    for (Index y = 0; y < 6; ++y)
      cells[x * 6 + y] = g.mul(y, g.inv(x));
  auto report = verify_right_gyrogroup(OpTable(6, 0, cells), {.uniqueness_sweep = true});
  CHECK_FALSE(report.right_identity);
  CHECK_FALSE(report.is_right_gyrogroup());
  CHECK(report.witnesses.count("right_identity") == 1);
}

TEST_CASE("non-bijective right translation") {
  const OpTable t(2, 0, {0, 0, 1, 0});
  CHECK_THROWS_AS(solve_gyration(t, 1, 0), Error);
  auto report = verify_right_gyrogroup(t);
  CHECK_FALSE(report.gyrations_exist_unique);
  CHECK_FALSE(report.is_right_gyrogroup());
}

TEST_CASE("the base operation on S3 is a nonassociative right loop") {
  auto g = named_group("S3");
  std::vector<Index> id_map(g.order(), g.identity());
  auto loop = deformed_loop_general(g, id_map);
  auto report = verify_right_gyrogroup(loop.table(), {.uniqueness_sweep = true});
  CHECK(report.right_identity);
  CHECK(report.right_inverses);
  CHECK(report.gyrations_exist_unique);
  CHECK_FALSE(report.associative);
}

TEST_CASE("gyration groups of the S3 loops") {
  auto g = named_group("S3");
  auto p = std::make_shared<const RClassPartition>(g);

  auto one = deformed_loop(g, ClassAssignedFunction(p, {0, 1, 1}));
  auto gg = gyration_group(one.table());
  CHECK(gg.order() == 3);
  CHECK(gg.is_abelian());
  CHECK(identify_small_group(gg) == "C3");
  auto report = verify_right_gyrogroup(one.table());
  CHECK(report.gyration_group_order == 3);
  CHECK(report.gyration_group_abelian);

  // k = 1 on transpositions, 2 on 3-cycles gives the opposite group
  auto third = deformed_loop(g, ClassAssignedFunction(p, {0, 1, 2}));
  CHECK(third.table() == opposite(g));
  CHECK(gyration_group(third.table()).order() == 1);
  CHECK(verify_right_gyrogroup(third.table()).associative);

  // the listed gyrations f((0 1),(0 2 1)), f((0 1),(0 1 2)), f((1 2),(0 2 1)) of this loop
  // are all trivial
  const auto k3 = ClassAssignedFunction(p, {0, 1, 2});
  auto at = [&](const char* c) { return *g.index_of(Permutation::from_cycles(c, 3)); };
  for (auto [y, z] : {std::pair{"(0 1)", "(0 2 1)"}, std::pair{"(0 1)", "(0 1 2)"}, std::pair{"(1 2)", "(0 2 1)"}}) {
    CAPTURE(y);
    CAPTURE(z);
    CHECK(solve_gyration(third.table(), at(y), at(z)).is_identity());
    CHECK(closed_form_gyration(g, k3, at(y), at(z)).is_identity());
    CHECK(closed_form_conjugator(g, k3, at(y), at(z)) == g.identity());
  }

  std::vector<std::size_t> orders;
  for (auto e = enumerate_cafs(p); auto k = e.next();) {
    auto loop = deformed_loop(g, *k);
    orders.push_back(gyration_group(loop.table()).order());
    for (Index y = 0; y < g.order(); ++y)
      for (Index z = 0; z < g.order(); ++z) {
        const Index a = closed_form_conjugator(g, *k, y, z);
        CHECK(g.element_order(a) != 2);
      }
  }
  CHECK(orders == std::vector<std::size_t>{1, 3, 3, 3, 3, 1});
}

TEST_CASE("gyration group summaries") {
  auto g = named_group("D4");
  auto s = summarize(g);
  CHECK(s.order == 8);
  CHECK_FALSE(s.abelian);
  CHECK(s.exponent == 4);
  CHECK(s.name == "D4");
  CHECK_THROWS_AS(gyration_group(deformed_loop(named_group("S4"),
                                               power_map_caf(std::make_shared<const RClassPartition>(named_group("S4")), 1))
                                     .table(),
                                 1),
                  CapExceeded);
}

TEST_CASE("report equality") {
  auto g = named_group("S3");
  auto a = verify_right_gyrogroup(g.table());
  auto b = verify_right_gyrogroup(g.table());
  CHECK(a == b);
  b.gyration_group_order = 2;
  CHECK_FALSE(a == b);
}
