#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gyro/finite_group.hpp"

namespace gyro {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxFormulaDegree = 50;
inline constexpr std::size_t kBruteCountCap = 1000;

/// Cycle lengths > 1 of a permutation of `degree` points, ascending.
struct CycleType {
  std::vector<unsigned> parts;
  unsigned degree = 0;

  std::size_t lcm() const;
  std::string to_string() const;
  bool operator==(const CycleType&) const = default;
};

/// Every nonempty multiset of parts >= 2 with sum <= n, ordered by number of
/// parts and then lexicographically.
std::vector<CycleType> cycle_types(unsigned n);

/// Product of lcm(parts) over cycle_types(n); 1 for n < 3. Throws
/// std::invalid_argument for n > kMaxFormulaDegree.
BigInt count_gyrotransversals(unsigned n);

/// Number of canonical class assigned functions on g, by enumeration.
/// Throws CapExceeded when |g| > kBruteCountCap.
BigInt brute_count(const FiniteGroup& g);

}  // namespace gyro
