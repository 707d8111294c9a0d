#include "gyro/gen_product.hpp"

#include <random>
#include <stdexcept>

#include "gyro/errors.hpp"

namespace gyro {

Index base_op(const FiniteGroup& g, Index x, Index y) {
  return g.mul(g.mul(g.inv(y), x), g.mul(y, y));
}

GenProduct GenProduct::build(const FiniteGroup& base, std::size_t cap, Bracket bracket,
                             ProductVerifyOptions options) {
  const std::size_t n = base.order();
  if (n * n > cap)
    throw CapExceeded("generalized product of a group of order " + std::to_string(n) + " has " +
                      std::to_string(n * n) + " elements, cap is " + std::to_string(cap));
  GenProduct p(base, bracket);
  const FiniteGroup& g = p.base_;
  const std::size_t N = n * n;

  auto bracket_of = [&](Index u, Index v) {
    return bracket == Bracket::kUVInverse ? g.mul(g.mul(u, v), g.mul(g.inv(u), g.inv(v)))
                                          : g.commutator(u, v);
  };
  p.mul_.resize(N * N);
  for (Index a = 0; a < n; ++a)
    for (Index x = 0; x < n; ++x)
      for (Index b = 0; b < n; ++b)
        for (Index y = 0; y < n; ++y) {
          const Index bxb = g.conjugate(x, b);
          const Index first = g.mul(g.mul(a, b), bracket_of(bxb, g.inv(y)));
          const Index second = base_op(g, bxb, y);
          p.mul_[std::size_t{p.pair(a, x)} * N + p.pair(b, y)] = p.pair(first, second);
        }

  auto fail = [&](const std::string& what) {
    throw AxiomFailure("generalized product (" +
                       std::string(bracket == Bracket::kUVInverse ? "[u,v]=uvu^-1v^-1" : "[u,v]=u^-1v^-1uv") +
                       "): " + what);
  };

  const Index e = p.identity();
  p.inv_.resize(N);
  for (Index q = 0; q < N; ++q) {
    if (p.mul(e, q) != q || p.mul(q, e) != q)
      fail("(1,1) is not a two-sided identity");
    // (a, x)^-1 = (a^-1, a x^-1 a^-1)
    const auto [a, x] = p.components(q);
    const Index expected = p.pair(g.inv(a), g.conjugate(g.inv(x), g.inv(a)));
    if (p.mul(q, expected) != e || p.mul(expected, q) != e)
      fail("(a^-1, a x^-1 a^-1) is not a two-sided inverse of (a, x)");
    p.inv_[q] = expected;
  }

  auto triple_ok = [&](Index r, Index s, Index t) { return p.mul(p.mul(r, s), t) == p.mul(r, p.mul(s, t)); };
  if (options.exhaustive || N <= options.exhaustive_limit) {
    for (Index r = 0; r < N; ++r)
      for (Index s = 0; s < N; ++s)
        for (Index t = 0; t < N; ++t)
          if (!triple_ok(r, s, t))
            fail("associativity fails");
    p.summary_.associativity_exhaustive = true;
    p.summary_.triples_checked = std::uint64_t{N} * N * N;
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(N - 1));
    for (std::uint64_t i = 0; i < options.samples; ++i)
      if (!triple_ok(pick(rng), pick(rng), pick(rng)))
        fail("associativity fails on a sampled triple");
    p.summary_.triples_checked = options.samples;
  }

  // G x {1} is a subgroup isomorphic to G, and {1} x G meets each of its
  // right cosets exactly once.
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (p.mul(p.pair(a, 0), p.pair(b, 0)) != p.pair(g.mul(a, b), 0))
        fail("G x {1} is not a copy of G");
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (x != y && p.components(p.mul(p.pair(0, x), p.inv(p.pair(0, y)))).second == 0)
        fail("{1} x G meets a right coset of G x {1} twice");
  return p;
}

std::vector<Index> conjugated_inverse_mismatches(const GenProduct& p) {
  const FiniteGroup& g = p.base();
  std::vector<Index> bad;
  for (Index q = 0; q < p.order(); ++q) {
    const auto [a, x] = p.components(q);
    if (p.inv(q) != p.pair(g.inv(a), g.conjugate(g.inv(x), a)))
      bad.push_back(q);
  }
  return bad;
}

Transversal::Transversal(const GenProduct& owner, std::vector<Index> members)
    : owner_(&owner), members_(std::move(members)), position_(owner.order(), -1) {
  for (std::size_t i = 0; i < members_.size(); ++i)
    position_[members_[i]] = static_cast<std::int64_t>(i);
}

Transversal embed_transversal(const GenProduct& product, std::span<const Index> g) {
  const FiniteGroup& G = product.base();
  if (g.size() != G.order())
    throw std::invalid_argument("map size does not match the group order");
  if (g[G.identity()] != G.identity())
    throw std::invalid_argument("g(1) must be 1");
  std::vector<Index> members(G.order());
  for (Index x = 0; x < G.order(); ++x) {
    if (g[x] >= G.order())
      throw std::invalid_argument("map value out of range");
    members[x] = product.pair(g[x], x);
  }
  // s t^-1 in G x {1} iff s, t share a right coset
  for (Index x = 0; x < G.order(); ++x)
    for (Index y = x + 1; y < G.order(); ++y)
      if (product.components(product.mul(members[x], product.inv(members[y]))).second == 0)
        throw AxiomFailure("S_g is not a right transversal of G x {1}");
  return Transversal(product, std::move(members));
}

CriterionResult is_gyrotransversal(const Transversal& t) {
  const GenProduct& p = t.owner();
  const FiniteGroup& G = p.base();
  for (Index x = 0; x < G.order(); ++x)
    if (!t.contains(p.inv(t.member(x))))
      return {false, Witness{x, std::nullopt, "S is not closed under inversion"}};
  for (Index x = 0; x < G.order(); ++x)
    for (Index h = 0; h < G.order(); ++h) {
      const Index hp = p.pair(h, G.identity());
      if (!t.contains(p.mul(p.mul(p.inv(hp), t.member(x)), hp)))
        return {false, Witness{x, h, "S is not closed under conjugation by G x {1}"}};
    }
  return {};
}

CriterionResult lemma_criterion(const FiniteGroup& g, std::span<const Index> map) {
  if (map.size() != g.order())
    throw std::invalid_argument("map size does not match the group order");
  for (Index x = 0; x < g.order(); ++x)
    if (map[g.inv(x)] != g.inv(map[x]))
      return {false, Witness{x, std::nullopt, "g(x^-1) != g(x)^-1"}};
  for (Index x = 0; x < g.order(); ++x)
    for (Index h = 0; h < g.order(); ++h)
      if (map[g.conjugate(x, h)] != g.conjugate(map[x], h))
        return {false, Witness{x, h, "g(h^-1 x h) != h^-1 g(x) h"}};
  return {};
}

}  // namespace gyro
