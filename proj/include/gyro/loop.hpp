#pragma once

#include <span>
#include <vector>

#include "gyro/class_functions.hpp"
#include "gyro/finite_group.hpp"
#include "gyro/op_table.hpp"

namespace gyro {

/// Magma table with a right identity, right inverses, and bijective right
/// translations.
class RightLoopTable {
 public:
  /// Throws AxiomFailure if `table` violates any of the above.
  static RightLoopTable from_table(OpTable table);

  const OpTable& table() const { return table_; }
  std::size_t order() const { return table_.order(); }
  Index identity() const { return table_.identity(); }
  Index operator()(Index x, Index y) const { return table_(x, y); }
  /// Smallest x' with x o x' = e.
  Index right_inverse(Index x) const { return right_inverse_[x]; }

  bool operator==(const RightLoopTable& o) const { return table_ == o.table_; }

 private:
  explicit RightLoopTable(OpTable t) : table_(std::move(t)) {}

  OpTable table_;
  std::vector<Index> right_inverse_;
};

/// x o_k y = y^{-k(y)} x y^{k(y)+1}.
RightLoopTable deformed_loop(const FiniteGroup& g, const ClassAssignedFunction& k);

/// x o_g y = (g(y)^-1 x g(y)) o y with o = base_op, i.e. the operation that
/// S_g = {(g(x), x)} induces on second coordinates. Throws std::invalid_argument
/// if g fails the gyrotransversal criterion.
RightLoopTable deformed_loop_general(const FiniteGroup& g, std::span<const Index> map);

/// w -> w^{k(w)-1} (identity at 1): the transversal map whose induced
/// operation is o_k. With g = w^{k(w)} instead, the induced operation is
/// o_{k+1}.
std::vector<Index> transversal_map(const FiniteGroup& g, const ClassAssignedFunction& k);

}  // namespace gyro
