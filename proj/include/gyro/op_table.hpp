#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gyro {

using Index = std::uint32_t;

/// Finite magma given by its Cayley table, with a designated identity
/// candidate. Nothing beyond closure is assumed; axioms are checked elsewhere.
class OpTable {
 public:
  OpTable() = default;
  /// `cells` is row-major, cells[x * order + y] = x o y.
  OpTable(std::size_t order, Index identity, std::vector<Index> cells);

  std::size_t order() const { return order_; }
  Index identity() const { return identity_; }
  Index operator()(Index x, Index y) const { return cells_[x * order_ + y]; }
  std::span<const Index> cells() const { return cells_; }
  std::span<const Index> row(Index x) const { return {cells_.data() + x * order_, order_}; }

  bool operator==(const OpTable&) const = default;

 private:
  std::size_t order_ = 0;
  Index identity_ = 0;
  std::vector<Index> cells_;
};

bool is_associative(const OpTable& t);

/// Every right translation x -> x o y is a bijection.
bool columns_are_permutations(const OpTable& t);

}  // namespace gyro
