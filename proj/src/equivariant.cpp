#include "gyro/equivariant.hpp"

#include <limits>

#include "gyro/errors.hpp"

namespace gyro {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

}  // namespace

EquivariantMapEnumerator::EquivariantMapEnumerator(const FiniteGroup& g, std::size_t cap)
    : order_(g.order()) {
  if (g.order() > cap)
    throw CapExceeded("equivariant-map search is capped at order " + std::to_string(cap) +
                      ", group has order " + std::to_string(g.order()));
  const RClassPartition partition(g);
  std::vector<Index> value(g.order(), kUnset);

  for (std::size_t c = 0; c < partition.size(); ++c) {
    const Index w = partition.representative(c);
    std::vector<Index> candidates;
    if (c == partition.identity_class()) {
      candidates.push_back(g.identity());
    } else {
      const auto cw = centralizer(g, w);
      candidates = centralizer_of_set(g, cw);
    }

    auto& class_choices = choices_.emplace_back();
    auto& class_values = choice_values_.emplace_back();
    for (Index v : candidates) {
      for (Index m : partition.members(c))
        value[m] = kUnset;
      bool consistent = true;
      auto set = [&](Index x, Index y) {
        if (value[x] == kUnset)
          value[x] = y;
        else if (value[x] != y)
          consistent = false;
      };
      for (Index h = 0; h < g.order() && consistent; ++h)
        set(g.conjugate(w, h), g.conjugate(v, h));
      for (Index m : partition.members(c))
        if (consistent && value[m] != kUnset)
          set(g.inv(m), g.inv(value[m]));
      // members only reachable through inversion: conjugates of w^-1
      for (Index h = 0; h < g.order() && consistent; ++h)
        set(g.conjugate(g.inv(w), h), g.conjugate(g.inv(v), h));
      if (!consistent)
        continue;
      auto& assignment = class_choices.emplace_back();
      for (Index m : partition.members(c))
        assignment.emplace_back(m, value[m]);
      class_values.push_back(v);
    }
    if (class_choices.empty())
      done_ = true;  // cannot happen for a group (v = identity always works)
  }
  cursor_.assign(choices_.size(), 0);
}

std::optional<EquivariantMap> EquivariantMapEnumerator::next() {
  if (done_)
    return std::nullopt;
  EquivariantMap map{std::vector<Index>(order_, kUnset)};
  for (std::size_t c = 0; c < choices_.size(); ++c)
    for (auto [x, y] : choices_[c][cursor_[c]])
      map.values[x] = y;
  done_ = true;
  for (std::size_t c = cursor_.size(); c-- > 0;) {
    if (++cursor_[c] < choices_[c].size()) {
      done_ = false;
      break;
    }
    cursor_[c] = 0;
  }
  return map;
}

std::uint64_t EquivariantMapEnumerator::count() const {
  std::uint64_t total = 1;
  for (const auto& c : choices_)
    total *= c.size();
  return total;
}

bool is_class_assigned(const FiniteGroup& g, const EquivariantMap& map) {
  for (Index x = 0; x < g.order(); ++x) {
    bool found = false;
    for (std::size_t m = 0; m < g.element_order(x) && !found; ++m)
      found = g.power(x, static_cast<std::int64_t>(m)) == map(x);
    if (!found)
      return false;
  }
  return true;
}

std::optional<ClassAssignedFunction> class_function_of(const FiniteGroup& g,
                                                       std::shared_ptr<const RClassPartition> partition,
                                                       const EquivariantMap& map) {
  std::vector<std::uint64_t> exponents(partition->size(), 0);
  for (std::size_t c = 1; c < partition->size(); ++c) {
    const Index w = partition->representative(c);
    bool found = false;
    for (std::size_t m = 0; m < g.element_order(w) && !found; ++m)
      if (g.power(w, static_cast<std::int64_t>(m)) == map(w)) {
        exponents[c] = m;
        found = true;
      }
    if (!found)
      return std::nullopt;
  }
  ClassAssignedFunction k(std::move(partition), std::move(exponents));
  if (induced_map(g, k) != map.values)
    return std::nullopt;
  return k;
}

}  // namespace gyro
