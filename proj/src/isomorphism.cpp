#include "gyro/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>

namespace gyro {

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

using Invariant = std::array<std::uint32_t, 6>;

// Quantities preserved by any identity-preserving isomorphism.
std::vector<Invariant> element_invariants(const OpTable& t) {
  const auto n = static_cast<Index>(t.order());
  std::vector<std::uint32_t> square_roots(n, 0);
  for (Index z = 0; z < n; ++z)
    ++square_roots[t(z, z)];

  std::vector<Invariant> inv(n);
  for (Index x = 0; x < n; ++x) {
    // right powers x, (x o x), ((x o x) o x), ...; first return to identity
    std::uint32_t right_order = 0;
    Index p = x;
    for (std::uint32_t m = 1; m <= n; ++m) {
      if (p == t.identity()) {
        right_order = m;
        break;
      }
      p = t(p, x);
    }
    std::uint32_t right_fixed = 0, left_fixed = 0, commuting = 0, idempotent_hits = 0;
    for (Index z = 0; z < n; ++z) {
      right_fixed += t(z, x) == z;
      left_fixed += t(x, z) == z;
      commuting += t(x, z) == t(z, x);
      idempotent_hits += t(x, z) == t.identity();
    }
    inv[x] = {right_order, right_fixed, left_fixed, commuting, square_roots[x], idempotent_hits};
  }
  return inv;
}

class Search {
 public:
  Search(const OpTable& a, const OpTable& b)
      : a_(a), b_(b), n_(static_cast<Index>(a.order())),
        inv_a_(element_invariants(a)), inv_b_(element_invariants(b)),
        phi_(n_, kUnset), psi_(n_, kUnset) {}

  bool invariant_multisets_match() const {
    auto x = inv_a_, y = inv_b_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y && inv_a_[a_.identity()] == inv_b_[b_.identity()];
  }

  std::optional<std::vector<Index>> run() {
    std::vector<Index> trail;
    if (!assign(a_.identity(), b_.identity(), trail))
      return std::nullopt;
    if (recurse())
      return phi_;
    return std::nullopt;
  }

 private:
  bool recurse() {
    Index next = kUnset;
    for (Index x = 0; x < n_; ++x)
      if (phi_[x] == kUnset) {
        next = x;
        break;
      }
    if (next == kUnset)
      return true;
    for (Index y = 0; y < n_; ++y) {
      if (psi_[y] != kUnset || inv_a_[next] != inv_b_[y])
        continue;
      std::vector<Index> trail;
      if (assign(next, y, trail) && recurse())
        return true;
      for (Index x : trail) {
        psi_[phi_[x]] = kUnset;
        phi_[x] = kUnset;
      }
    }
    return false;
  }

  // Sets phi(x) = y and closes under products with everything already mapped.
  // Records every assignment in `trail`, including on failure.
  bool assign(Index x, Index y, std::vector<Index>& trail) {
    std::vector<Index> queue;
    auto bind = [&](Index u, Index v) {
      if (phi_[u] != kUnset)
        return phi_[u] == v;
      if (psi_[v] != kUnset || inv_a_[u] != inv_b_[v])
        return false;
      phi_[u] = v;
      psi_[v] = u;
      trail.push_back(u);
      queue.push_back(u);
      return true;
    };
    if (!bind(x, y))
      return false;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Index u = queue[q];
      for (Index w = 0; w < n_; ++w) {
        if (phi_[w] == kUnset)
          continue;
        if (!bind(a_(u, w), b_(phi_[u], phi_[w])) || !bind(a_(w, u), b_(phi_[w], phi_[u])))
          return false;
      }
    }
    return true;
  }

  const OpTable& a_;
  const OpTable& b_;
  Index n_;
  std::vector<Invariant> inv_a_, inv_b_;
  std::vector<Index> phi_, psi_;
};

}  // namespace

bool is_isomorphism(const OpTable& a, const OpTable& b, std::span<const Index> mapping) {
  const auto n = static_cast<Index>(a.order());
  if (b.order() != n || mapping.size() != n || mapping[a.identity()] != b.identity())
    return false;
  std::vector<bool> hit(n, false);
  for (Index m : mapping) {
    if (m >= n || hit[m])
      return false;
    hit[m] = true;
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (mapping[a(x, y)] != b(mapping[x], mapping[y]))
        return false;
  return true;
}

IsoCertificate tables_isomorphic(const OpTable& a, const OpTable& b) {
  if (a.order() != b.order())
    return {std::nullopt, "orders differ (" + std::to_string(a.order()) + " vs " +
                              std::to_string(b.order()) + ")"};
  if (a == b) {
    std::vector<Index> identity(a.order());
    for (Index x = 0; x < identity.size(); ++x)
      identity[x] = x;
    return {std::move(identity), {}};
  }
  Search search(a, b);
  if (!search.invariant_multisets_match())
    return {std::nullopt, "element invariants differ"};
  if (auto phi = search.run())
    return {std::move(phi), {}};
  return {std::nullopt, "exhaustive search found no isomorphism"};
}

}  // namespace gyro
