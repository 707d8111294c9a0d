#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gyro/finite_group.hpp"

namespace gyro {

inline constexpr std::size_t kDefaultProductCap = 1024;

/// Reading of the bracket [u, v] in the product rule.
enum class Bracket {
  kUVInverse,    ///< u v u^-1 v^-1 (the reading under which G x G is a group)
  kInverseUV,    ///< u^-1 v^-1 u v
};

struct ProductVerifyOptions {
  bool exhaustive = false;           ///< force the full O(N^3) associativity sweep
  std::size_t exhaustive_limit = 216;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20240607;
};

struct ProductCheckSummary {
  bool associativity_exhaustive = false;
  std::uint64_t triples_checked = 0;
};

/// x o y = y^-1 x y^2.
Index base_op(const FiniteGroup& g, Index x, Index y);

/// The group on G x G with
///   (a, x)(b, y) = (a b [b^-1 x b, y^-1], (b^-1 x b) o y),
/// where o is base_op. Pair (a, x) has index a * |G| + x.
class GenProduct {
 public:
  /// Builds and verifies the product. Throws CapExceeded when |G|^2 > cap and
  /// AxiomFailure when any group axiom (identity (1,1), inverse
  /// (a^-1, a x^-1 a^-1), associativity) or the subgroup / transversal facts
  /// about G x {1} and {1} x G fail.
  static GenProduct build(const FiniteGroup& base, std::size_t cap = kDefaultProductCap,
                          Bracket bracket = Bracket::kUVInverse, ProductVerifyOptions options = {});

  const FiniteGroup& base() const { return base_; }
  std::size_t order() const { return n_ * n_; }
  Index pair(Index a, Index x) const { return static_cast<Index>(a * n_ + x); }
  std::pair<Index, Index> components(Index p) const {
    return {static_cast<Index>(p / n_), static_cast<Index>(p % n_)};
  }
  Index mul(Index p, Index q) const { return mul_[std::size_t{p} * order() + q]; }
  Index inv(Index p) const { return inv_[p]; }
  Index identity() const { return pair(base_.identity(), base_.identity()); }
  Bracket bracket() const { return bracket_; }
  const ProductCheckSummary& summary() const { return summary_; }

 private:
  GenProduct(FiniteGroup base, Bracket bracket) : base_(std::move(base)), n_(base_.order()), bracket_(bracket) {}

  FiniteGroup base_;
  std::size_t n_;
  Bracket bracket_;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
  ProductCheckSummary summary_;
};

inline GenProduct generalized_product(const FiniteGroup& g, std::size_t cap = kDefaultProductCap) {
  return GenProduct::build(g, cap);
}

/// Pairs (a, x) whose inverse differs from (a^-1, a^-1 x^-1 a). The true
/// inverse is (a^-1, a x^-1 a^-1); the two agree exactly when a^2 commutes with x.
std::vector<Index> conjugated_inverse_mismatches(const GenProduct& p);

/// Failure location for the gyrotransversal and lemma checks. `x` is always a
/// base-group element: the second coordinate of the offending member, or the
/// argument of g. `h` is the conjugating element when conjugation failed.
struct Witness {
  Index x = 0;
  std::optional<Index> h;
  std::string condition;
};

struct CriterionResult {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

/// S_g = {(g(x), x)} inside a GenProduct, which must outlive it.
class Transversal {
 public:
  const GenProduct& owner() const { return *owner_; }
  /// Pair index of the member with second coordinate x.
  Index member(Index x) const { return members_[x]; }
  std::span<const Index> members() const { return members_; }
  bool contains(Index p) const { return position_[p] >= 0; }

 private:
  friend Transversal embed_transversal(const GenProduct&, std::span<const Index>);
  Transversal(const GenProduct& owner, std::vector<Index> members);

  const GenProduct* owner_;
  std::vector<Index> members_;
  std::vector<std::int64_t> position_;
};

/// Throws std::invalid_argument if g(1) != 1 or g has the wrong size, and
/// AxiomFailure if the members do not meet every right coset of G x {1} once.
Transversal embed_transversal(const GenProduct& product, std::span<const Index> g);

/// Closed under inversion and under conjugation by G x {1}.
CriterionResult is_gyrotransversal(const Transversal& t);

/// g(x^-1) = g(x)^-1 and g(h^-1 x h) = h^-1 g(x) h for all x, h.
CriterionResult lemma_criterion(const FiniteGroup& g, std::span<const Index> map);

}  // namespace gyro
