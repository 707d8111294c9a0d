#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gyro/class_functions.hpp"
#include "gyro/finite_group.hpp"

namespace gyro {

inline constexpr std::size_t kDefaultEquivariantCap = 24;

/// g: G -> G with g(1) = 1, g(x^-1) = g(x)^-1 and g(h^-1 x h) = h^-1 g(x) h.
struct EquivariantMap {
  std::vector<Index> values;

  Index operator()(Index x) const { return values[x]; }
  bool operator==(const EquivariantMap&) const = default;
};

/// Enumerates every equivariant map of a group.
///
/// For each R-class representative w the value g(w) must commute with the
/// whole centralizer C(w), i.e. lie in Z(C(w)). Each such candidate fixes g
/// on the class by conjugation and inversion; candidates whose propagation is
/// inconsistent are dropped. The classes are independent, so the maps are the
/// product of the surviving per-class choices, enumerated lexicographically.
class EquivariantMapEnumerator {
 public:
  /// Throws CapExceeded when |G| > cap.
  explicit EquivariantMapEnumerator(const FiniteGroup& g, std::size_t cap = kDefaultEquivariantCap);

  std::optional<EquivariantMap> next();
  std::uint64_t count() const;

  /// Values of g(representative) that survive propagation, per R-class.
  const std::vector<std::vector<Index>>& class_choices() const { return choice_values_; }

 private:
  std::size_t order_;
  // per class, per surviving choice: (member, value) pairs
  std::vector<std::vector<std::vector<std::pair<Index, Index>>>> choices_;
  std::vector<std::vector<Index>> choice_values_;
  std::vector<std::size_t> cursor_;
  bool done_ = false;
};

inline EquivariantMapEnumerator enumerate_equivariant_maps(const FiniteGroup& g,
                                                           std::size_t cap = kDefaultEquivariantCap) {
  return EquivariantMapEnumerator(g, cap);
}

/// True iff g(x) is a power of x for every x, i.e. g = w -> w^{k(w)} for some
/// class assigned k.
bool is_class_assigned(const FiniteGroup& g, const EquivariantMap& map);

/// The class assigned function inducing `map` (canonical), if there is one.
std::optional<ClassAssignedFunction> class_function_of(const FiniteGroup& g,
                                                       std::shared_ptr<const RClassPartition> partition,
                                                       const EquivariantMap& map);

}  // namespace gyro
