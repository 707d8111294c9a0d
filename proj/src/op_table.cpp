#include "gyro/op_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace gyro {

OpTable::OpTable(std::size_t order, Index identity, std::vector<Index> cells)
    : order_(order), identity_(identity), cells_(std::move(cells)) {
  if (order == 0)
    throw std::invalid_argument("operation table must be nonempty");
  if (cells_.size() != order * order)
    throw std::invalid_argument("operation table has " + std::to_string(cells_.size()) +
                                " cells, expected " + std::to_string(order * order));
  if (identity >= order)
    throw std::invalid_argument("identity index out of range");
  for (Index c : cells_)
    if (c >= order)
      throw std::invalid_argument("table entry out of range");
}

bool is_associative(const OpTable& t) {
  const auto n = static_cast<Index>(t.order());
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Index xy = t(x, y);
      for (Index z = 0; z < n; ++z)
        if (t(xy, z) != t(x, t(y, z)))
          return false;
    }
  return true;
}

bool columns_are_permutations(const OpTable& t) {
  const auto n = static_cast<Index>(t.order());
  std::vector<bool> hit(n);
  for (Index y = 0; y < n; ++y) {
    std::fill(hit.begin(), hit.end(), false);
    for (Index x = 0; x < n; ++x) {
      if (hit[t(x, y)])
        return false;
      hit[t(x, y)] = true;
    }
  }
  return true;
}

}  // namespace gyro
