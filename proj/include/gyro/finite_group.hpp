#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gyro/op_table.hpp"
#include "gyro/permutation.hpp"

namespace gyro {

inline constexpr std::size_t kDefaultGroupCap = 200;

/// Permutation group with full multiplication and inverse tables.
///
/// Elements are sorted lexicographically by one-line notation, so the
/// identity always has index 0. Immutable once built.
class FiniteGroup {
 public:
  /// Closure of `gens` under composition. Throws CapExceeded past `cap`
  /// elements and std::invalid_argument on empty input or mixed degrees.
  static FiniteGroup from_generators(std::span<const Permutation> gens,
                                     std::size_t cap = kDefaultGroupCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return elements_.front().degree(); }
  Index identity() const { return 0; }

  Index mul(Index x, Index y) const { return mul_[x * order() + y]; }
  Index inv(Index x) const { return inv_[x]; }
  std::size_t element_order(Index x) const { return orders_[x]; }

  /// x^k for any integer k.
  Index power(Index x, std::int64_t k) const;
  /// a^-1 x a.
  Index conjugate(Index x, Index a) const { return mul(mul(inv(a), x), a); }
  /// x^-1 y^-1 x y.
  Index commutator(Index x, Index y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  const Permutation& element(Index x) const { return elements_[x]; }
  std::span<const Permutation> elements() const { return elements_; }
  std::optional<Index> index_of(const Permutation& p) const;

  bool is_abelian() const;
  std::size_t exponent() const;
  /// element order -> number of elements of that order
  std::map<std::size_t, std::size_t> order_histogram() const;

  OpTable table() const { return OpTable(order(), identity(), mul_); }

 private:
  FiniteGroup() = default;

  std::vector<Permutation> elements_;
  std::map<Permutation, Index> index_;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
  std::vector<std::size_t> orders_;
};

/// Orbits of the conjugation action, each sorted, listed by smallest member.
std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g);

/// {h : hx = xh}, sorted.
std::vector<Index> centralizer(const FiniteGroup& g, Index x);

/// Elements commuting with every member of `set`, sorted.
std::vector<Index> centralizer_of_set(const FiniteGroup& g, std::span<const Index> set);

/// Subgroup generated by `gens` (the trivial subgroup for an empty list), sorted.
std::vector<Index> subgroup_generated(const FiniteGroup& g, std::span<const Index> gens);

}  // namespace gyro
