#include "gyro/loop.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "gyro/errors.hpp"
#include "gyro/gen_product.hpp"

namespace gyro {

RightLoopTable RightLoopTable::from_table(OpTable table) {
  const auto n = static_cast<Index>(table.order());
  const Index e = table.identity();
  for (Index x = 0; x < n; ++x)
    if (table(x, e) != x)
      throw AxiomFailure("element " + std::to_string(x) + " o e != " + std::to_string(x));
  if (!columns_are_permutations(table))
    throw AxiomFailure("a right translation is not a bijection");
  RightLoopTable loop(std::move(table));
  loop.right_inverse_.assign(n, std::numeric_limits<Index>::max());
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y)
      if (loop(x, y) == e) {
        loop.right_inverse_[x] = y;
        break;
      }
    if (loop.right_inverse_[x] == std::numeric_limits<Index>::max())
      throw AxiomFailure("element " + std::to_string(x) + " has no right inverse");
  }
  return loop;
}

RightLoopTable deformed_loop(const FiniteGroup& g, const ClassAssignedFunction& k) {
  const auto n = static_cast<Index>(g.order());
  std::vector<Index> cells(std::size_t{n} * n);
  for (Index y = 0; y < n; ++y) {
    const auto ky = static_cast<std::int64_t>(k(y) % g.element_order(y));
    const Index left = g.power(y, -ky);
    const Index right = g.power(y, ky + 1);
    for (Index x = 0; x < n; ++x)
      cells[std::size_t{x} * n + y] = g.mul(g.mul(left, x), right);
  }
  return RightLoopTable::from_table(OpTable(n, g.identity(), std::move(cells)));
}

RightLoopTable deformed_loop_general(const FiniteGroup& g, std::span<const Index> map) {
  if (map.size() != g.order() || map[g.identity()] != g.identity())
    throw std::invalid_argument("deformation map must be defined on the group and fix 1");
  if (auto check = lemma_criterion(g, map); !check)
    throw std::invalid_argument("deformation map is not equivariant: " + check.witness->condition);
  const auto n = static_cast<Index>(g.order());
  std::vector<Index> cells(std::size_t{n} * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      cells[std::size_t{x} * n + y] = base_op(g, g.conjugate(x, map[y]), y);
  return RightLoopTable::from_table(OpTable(n, g.identity(), std::move(cells)));
}

std::vector<Index> transversal_map(const FiniteGroup& g, const ClassAssignedFunction& k) {
  std::vector<Index> map(g.order());
  for (Index w = 0; w < g.order(); ++w)
    map[w] = w == g.identity()
                 ? g.identity()
                 : g.power(w, static_cast<std::int64_t>(k(w) % g.element_order(w)) - 1);
  return map;
}

}  // namespace gyro
