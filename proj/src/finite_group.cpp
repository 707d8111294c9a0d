#include "gyro/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gyro/errors.hpp"

namespace gyro {

FiniteGroup FiniteGroup::from_generators(std::span<const Permutation> gens, std::size_t cap) {
  if (gens.empty())
    throw std::invalid_argument("at least one generator is required");
  const std::size_t degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generators have mixed degrees");

  // Right-multiplying by generators suffices: in a finite group the inverse
  // of a generator is one of its positive powers.
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> frontier{Permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& a : frontier)
      for (const auto& g : gens) {
        auto c = a * g;
        if (seen.insert(c).second) {
          if (seen.size() > cap)
            throw CapExceeded("group closure exceeds " + std::to_string(cap) + " elements");
          next.push_back(std::move(c));
        }
      }
    frontier = std::move(next);
  }

  FiniteGroup g;
  g.elements_.assign(seen.begin(), seen.end());
  const std::size_t n = g.elements_.size();
  for (std::size_t i = 0; i < n; ++i)
    g.index_.emplace(g.elements_[i], static_cast<Index>(i));

  g.mul_.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      g.mul_[x * n + y] = g.index_.at(g.elements_[x] * g.elements_[y]);

  g.inv_.resize(n);
  g.orders_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    g.inv_[x] = g.index_.at(g.elements_[x].inverse());
    std::size_t m = 1;
    for (Index p = static_cast<Index>(x); p != 0; p = g.mul(p, static_cast<Index>(x)))
      ++m;
    g.orders_[x] = m;
  }
  return g;
}

Index FiniteGroup::power(Index x, std::int64_t k) const {
  const auto m = static_cast<std::int64_t>(orders_[x]);
  std::int64_t r = k % m;
  if (r < 0)
    r += m;
  Index result = identity();
  for (std::int64_t i = 0; i < r; ++i)
    result = mul(result, x);
  return result;
}

std::optional<Index> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

bool FiniteGroup::is_abelian() const {
  const auto n = static_cast<Index>(order());
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y)
      if (mul(x, y) != mul(y, x))
        return false;
  return true;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (auto o : orders_)
    e = std::lcm(e, o);
  return e;
}

std::map<std::size_t, std::size_t> FiniteGroup::order_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (auto o : orders_)
    ++h[o];
  return h;
}

std::vector<std::vector<Index>> conjugacy_classes(const FiniteGroup& g) {
  const auto n = static_cast<Index>(g.order());
  std::vector<bool> placed(n, false);
  std::vector<std::vector<Index>> classes;
  for (Index x = 0; x < n; ++x) {
    if (placed[x])
      continue;
    std::vector<Index> cls;
    for (Index a = 0; a < n; ++a) {
      Index c = g.conjugate(x, a);
      if (!placed[c]) {
        placed[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Index> centralizer(const FiniteGroup& g, Index x) {
  const Index one[] = {x};
  return centralizer_of_set(g, one);
}

std::vector<Index> centralizer_of_set(const FiniteGroup& g, std::span<const Index> set) {
  std::vector<Index> result;
  for (Index h = 0; h < g.order(); ++h)
    if (std::all_of(set.begin(), set.end(), [&](Index s) { return g.mul(h, s) == g.mul(s, h); }))
      result.push_back(h);
  return result;
}

std::vector<Index> subgroup_generated(const FiniteGroup& g, std::span<const Index> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Index> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Index s : gens) {
      Index c = g.mul(members[i], s);
      if (!in[c]) {
        in[c] = true;
        members.push_back(c);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace gyro
