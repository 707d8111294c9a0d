#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/finite_group.hpp"

namespace gyro {

/// Built-in groups: "S<n>", "A<n>", "D<n>" (dihedral of order 2n; D2 is the
/// Klein four-group), "C<n>" (cyclic), "Q8". Throws ParseError for unknown
/// names and CapExceeded when the group is larger than `cap`.
FiniteGroup named_group(std::string_view name, std::size_t cap = kDefaultGroupCap);

/// A registered name, or "gens:(0 1),(0 1 2 3)" with 0-based points.
FiniteGroup parse_group_spec(std::string_view spec, std::size_t cap = kDefaultGroupCap);

/// Splits on commas that are not inside parentheses.
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

/// Name of a registered group of order <= 24 isomorphic to `g`, if any.
std::optional<std::string> identify_small_group(const FiniteGroup& g);

}  // namespace gyro
