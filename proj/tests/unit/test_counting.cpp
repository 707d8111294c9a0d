#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gyro/counting.hpp"
#include "gyro/errors.hpp"
#include "gyro/group_registry.hpp"
#include "oracles.hpp"

using namespace gyro;

namespace {

// Cycle types of all non-identity permutations of n points, from the permutations themselves.
std::set<std::vector<unsigned>> cycle_types_by_enumeration(unsigned n) {
  std::set<std::vector<unsigned>> out;
  for (const auto& p : oracle::all_permutations(n)) {
    std::vector<bool> seen(n);
    std::vector<unsigned> parts;
    for (unsigned i = 0; i < n; ++i) {
      unsigned len = 0;
      for (unsigned j = i; !seen[j]; j = p[j], ++len)
        seen[j] = true;
      if (len > 1)
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end());
    if (!parts.empty())
      out.insert(parts);
  }
  return out;
}

}  // namespace

TEST_CASE("cycle types") {
  CHECK(cycle_types(0).empty());
  CHECK(cycle_types(1).empty());
  CHECK(cycle_types(2).size() == 1);

  std::vector<std::string> five;
  for (const auto& t : cycle_types(5))
    five.push_back(t.to_string());
  CHECK(five == std::vector<std::string>{"(2)", "(3)", "(4)", "(5)", "(2,2)", "(2,3)"});
  CHECK(cycle_types(6).size() == 10);
  CHECK(cycle_types(10).size() == 41);

  for (unsigned n = 2; n <= 7; ++n) {
    std::set<std::vector<unsigned>> got;
    for (const auto& t : cycle_types(n)) {
      CHECK(t.degree == n);
      CHECK(std::is_sorted(t.parts.begin(), t.parts.end()));
      got.insert(t.parts);
    }
    CHECK(got == cycle_types_by_enumeration(n));
    CHECK(got.size() == cycle_types(n).size());
  }
  CHECK(CycleType{{2, 3}, 5}.lcm() == 6);
  CHECK(CycleType{{4, 6}, 10}.lcm() == 12);
}

TEST_CASE("counts from the cycle type product") {
  CHECK(count_gyrotransversals(0) == 1);
  CHECK(count_gyrotransversals(2) == 1);
  CHECK(count_gyrotransversals(3) == 6);
  CHECK(count_gyrotransversals(4) == 48);
  CHECK(count_gyrotransversals(5) == 1440);
  CHECK(count_gyrotransversals(6) == 207360);
  CHECK(count_gyrotransversals(7) == 1045094400);
  CHECK(count_gyrotransversals(10) == BigInt("197246951611422595035955200000000"));

  for (unsigned n = 3; n <= 12; ++n) {
    BigInt product = 1;
    for (const auto& t : cycle_types(n))
      product *= std::accumulate(t.parts.begin(), t.parts.end(), std::size_t{1},
                                 [](std::size_t a, unsigned b) { return std::lcm(a, std::size_t{b}); });
    CHECK(count_gyrotransversals(n) == product);
  }
  CHECK(count_gyrotransversals(kMaxFormulaDegree) > 0);
  CHECK_THROWS_AS(count_gyrotransversals(kMaxFormulaDegree + 1), std::invalid_argument);
}

TEST_CASE("formula agrees with enumeration on symmetric groups") {
  for (unsigned n = 3; n <= 6; ++n) {
    CAPTURE(n);
    auto g = named_group("S" + std::to_string(n), 1000);
    CHECK(brute_count(g) == count_gyrotransversals(n));
  }
  // below degree 3 the count is fixed at 1; S2 itself still has two functions
  CHECK(brute_count(named_group("S1")) == 1);
  CHECK(brute_count(named_group("S2")) == 2);
}

TEST_CASE("enumeration on other groups") {
  CHECK(brute_count(named_group("Q8")) == 128);
  CHECK(brute_count(named_group("D4")) == 32);
  CHECK(brute_count(named_group("A4")) == 6);
  CHECK_THROWS_AS(brute_count(named_group("S7", 5040)), CapExceeded);
}
