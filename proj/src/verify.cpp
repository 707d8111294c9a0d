#include "gyro/verify.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "gyro/errors.hpp"
#include "gyro/group_registry.hpp"

namespace gyro {

namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

// Preimages of every element under x -> x o w; kNone where there is no
// unique preimage.
std::vector<Index> unique_preimages(const OpTable& t, Index w) {
  const auto n = static_cast<Index>(t.order());
  std::vector<Index> pre(n, kNone);
  std::vector<unsigned> hits(n, 0);
  for (Index s = 0; s < n; ++s) {
    ++hits[t(s, w)];
    pre[t(s, w)] = s;
  }
  for (Index v = 0; v < n; ++v)
    if (hits[v] != 1)
      pre[v] = kNone;
  return pre;
}

}  // namespace

bool Gyration::is_identity() const {
  for (std::size_t i = 0; i < action.size(); ++i)
    if (action[i] != i)
      return false;
  return true;
}

Gyration solve_gyration(const OpTable& loop, Index y, Index z) {
  const auto n = static_cast<Index>(loop.order());
  const Index w = loop(y, z);
  const auto pre = unique_preimages(loop, w);
  Gyration f{y, z, std::vector<Index>(n)};
  for (Index x = 0; x < n; ++x) {
    f.action[x] = pre[loop(loop(x, y), z)];
    if (f.action[x] == kNone)
      throw Error("right translation by " + std::to_string(w) + " is not a bijection");
  }
  return f;
}

Index closed_form_conjugator(const FiniteGroup& g, const ClassAssignedFunction& k, Index y, Index z) {
  const auto exp = [&](Index w) { return static_cast<std::int64_t>(k(w) % g.element_order(w)); };
  const auto ky = exp(y);
  const auto kz = exp(z);
  const Index y_oz = g.mul(g.mul(g.power(z, -kz), y), g.power(z, kz + 1));
  const Index yz = g.mul(y, z);
  return g.mul(g.mul(g.power(y, ky), g.power(yz, -exp(y_oz))), g.power(z, kz));
}

Gyration closed_form_gyration(const FiniteGroup& g, const ClassAssignedFunction& k, Index y, Index z) {
  const Index a = closed_form_conjugator(g, k, y, z);
  Gyration f{y, z, std::vector<Index>(g.order())};
  for (Index x = 0; x < g.order(); ++x)
    f.action[x] = g.conjugate(x, a);
  return f;
}

CriterionResult is_automorphism(const OpTable& loop, std::span<const Index> p) {
  const auto n = static_cast<Index>(loop.order());
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (p[loop(x, y)] != loop(p[x], p[y]))
        return {false, Witness{x, y, "p(x o y) != p(x) o p(y)"}};
  return {};
}

bool GyroReport::operator==(const GyroReport& o) const {
  auto key = [](const GyroReport& r) {
    return std::tie(r.right_identity, r.right_inverses, r.gyrations_exist_unique, r.gyrations_automorphisms,
                    r.gyration_of_inverse_trivial, r.associative, r.gyration_group_order,
                    r.gyration_group_abelian);
  };
  if (key(*this) != key(o) || witnesses.size() != o.witnesses.size())
    return false;
  for (const auto& [name, w] : witnesses) {
    auto it = o.witnesses.find(name);
    if (it == o.witnesses.end() || it->second.elements != w.elements || it->second.detail != w.detail)
      return false;
  }
  return true;
}

std::vector<Gyration> all_gyrations(const OpTable& loop) {
  const auto n = static_cast<Index>(loop.order());
  std::vector<Gyration> result;
  result.reserve(std::size_t{n} * n);
  for (Index y = 0; y < n; ++y)
    for (Index z = 0; z < n; ++z)
      result.push_back(solve_gyration(loop, y, z));
  return result;
}

GyroReport verify_right_gyrogroup(const OpTable& loop, GyroVerifyOptions options) {
  GyroReport r;
  const auto n = static_cast<Index>(loop.order());
  const Index e = loop.identity();

  r.right_identity = true;
  for (Index x = 0; x < n && r.right_identity; ++x)
    if (loop(x, e) != x) {
      r.right_identity = false;
      r.witnesses["right_identity"] = {{x}, "x o e != x"};
    }

  // every right inverse of y, so f(y, y') can be checked for each
  std::vector<std::vector<Index>> right_inverses(n);
  r.right_inverses = true;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y)
      if (loop(x, y) == e)
        right_inverses[x].push_back(y);
    if (right_inverses[x].empty() && r.right_inverses) {
      r.right_inverses = false;
      r.witnesses["right_inverses"] = {{x}, "no x' with x o x' = e"};
    }
  }

  // existence and uniqueness of f(y, z)(x) for every triple
  std::vector<std::vector<Index>> gyrations(std::size_t{n} * n);
  r.gyrations_exist_unique = true;
  for (Index y = 0; y < n && r.gyrations_exist_unique; ++y)
    for (Index z = 0; z < n && r.gyrations_exist_unique; ++z) {
      const auto pre = unique_preimages(loop, loop(y, z));
      auto& action = gyrations[std::size_t{y} * n + z];
      action.resize(n);
      for (Index x = 0; x < n; ++x) {
        action[x] = pre[loop(loop(x, y), z)];
        if (action[x] == kNone) {
          r.gyrations_exist_unique = false;
          r.witnesses["gyrations_exist_unique"] = {{x, y, z}, "no unique s with s o (y o z) = (x o y) o z"};
          break;
        }
      }
    }
  if (r.gyrations_exist_unique && options.uniqueness_sweep) {
    for (Index y = 0; y < n && r.gyrations_exist_unique; ++y)
      for (Index z = 0; z < n && r.gyrations_exist_unique; ++z)
        for (Index x = 0; x < n && r.gyrations_exist_unique; ++x) {
          const Index target = loop(loop(x, y), z);
          unsigned solutions = 0;
          for (Index s = 0; s < n; ++s)
            solutions += loop(s, loop(y, z)) == target;
          if (solutions != 1) {
            r.gyrations_exist_unique = false;
            r.witnesses["gyrations_exist_unique"] = {{x, y, z}, "direct sweep found " +
                                                                    std::to_string(solutions) + " solutions"};
          }
        }
  }

  if (!r.gyrations_exist_unique) {
    r.witnesses["gyrations_automorphisms"] = {{}, "gyrations undefined"};
    r.witnesses["gyration_of_inverse_trivial"] = {{}, "gyrations undefined"};
    return r;
  }

  r.gyrations_automorphisms = true;
  r.associative = true;
  for (Index y = 0; y < n; ++y)
    for (Index z = 0; z < n; ++z) {
      const auto& action = gyrations[std::size_t{y} * n + z];
      bool identity = true;
      for (Index x = 0; x < n; ++x)
        identity = identity && action[x] == x;
      r.associative = r.associative && identity;
      if (!r.gyrations_automorphisms)
        continue;
      auto sorted = action;
      std::sort(sorted.begin(), sorted.end());
      bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      if (!bijective) {
        r.gyrations_automorphisms = false;
        r.witnesses["gyrations_automorphisms"] = {{y, z}, "f(y, z) is not a bijection"};
      } else if (auto hom = is_automorphism(loop, action); !hom) {
        r.gyrations_automorphisms = false;
        r.witnesses["gyrations_automorphisms"] = {{y, z, hom.witness->x, *hom.witness->h},
                                                  "f(y, z)(a o b) != f(y, z)(a) o f(y, z)(b)"};
      }
    }

  r.gyration_of_inverse_trivial = r.right_inverses;
  if (!r.right_inverses)
    r.witnesses["gyration_of_inverse_trivial"] = {{}, "right inverses missing"};
  for (Index y = 0; y < n && r.gyration_of_inverse_trivial; ++y)
    for (Index yi : right_inverses[y]) {
      const auto& action = gyrations[std::size_t{y} * n + yi];
      bool identity = true;
      for (Index x = 0; x < n; ++x)
        identity = identity && action[x] == x;
      if (!identity) {
        r.gyration_of_inverse_trivial = false;
        r.witnesses["gyration_of_inverse_trivial"] = {{y, yi}, "f(y, y') is not the identity"};
        break;
      }
    }

  if (r.gyrations_automorphisms) {
    auto gg = gyration_group(loop, options.gyration_group_cap);
    r.gyration_group_order = gg.order();
    r.gyration_group_abelian = gg.is_abelian();
  }
  return r;
}

FiniteGroup gyration_group(const OpTable& loop, std::size_t cap) {
  std::vector<Permutation> gens{Permutation(loop.order())};
  for (auto& f : all_gyrations(loop)) {
    auto p = Permutation(std::move(f.action));
    if (!p.is_identity())
      gens.push_back(std::move(p));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return FiniteGroup::from_generators(gens, cap);
}

GroupSummary summarize(const FiniteGroup& g) {
  GroupSummary s;
  s.order = g.order();
  s.abelian = g.is_abelian();
  s.exponent = g.exponent();
  s.order_histogram = g.order_histogram();
  s.name = identify_small_group(g);
  return s;
}

}  // namespace gyro
