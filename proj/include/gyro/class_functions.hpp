#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/finite_group.hpp"

namespace gyro {

/// Partition of a group under R: a R b iff b is conjugate to a or to a^-1.
///
/// Classes are listed by smallest member; the representative is that member,
/// so the identity class is always class 0.
class RClassPartition {
 public:
  explicit RClassPartition(const FiniteGroup& g);

  std::size_t size() const { return classes_.size(); }
  std::span<const std::vector<Index>> classes() const { return classes_; }
  const std::vector<Index>& members(std::size_t c) const { return classes_[c]; }
  Index representative(std::size_t c) const { return classes_[c].front(); }
  std::size_t class_of(Index x) const { return class_of_[x]; }
  /// Common element order of the members of class c.
  std::size_t class_order(std::size_t c) const { return orders_[c]; }
  std::size_t identity_class() const { return 0; }
  std::size_t group_order() const { return class_of_.size(); }

 private:
  std::vector<std::vector<Index>> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> orders_;
};

inline RClassPartition r_classes(const FiniteGroup& g) { return RClassPartition(g); }

/// k: G -> N with k(identity) = 0, constant on R-classes. Exponents are kept
/// exactly as given; canonical() reduces them modulo the class order.
class ClassAssignedFunction {
 public:
  /// Throws std::invalid_argument on a size mismatch or a nonzero identity exponent.
  ClassAssignedFunction(std::shared_ptr<const RClassPartition> partition,
                        std::vector<std::uint64_t> exponents);

  static ClassAssignedFunction zero(std::shared_ptr<const RClassPartition> partition);

  std::uint64_t operator()(Index x) const { return exponents_[partition_->class_of(x)]; }
  std::uint64_t exponent(std::size_t cls) const { return exponents_[cls]; }
  std::span<const std::uint64_t> exponents() const { return exponents_; }
  const RClassPartition& partition() const { return *partition_; }
  const std::shared_ptr<const RClassPartition>& partition_ptr() const { return partition_; }

  ClassAssignedFunction canonical() const;
  bool is_canonical() const;

  /// "(0 1):1,(0 1 2):2", listing nonzero non-identity classes by representative.
  std::string to_spec(const FiniteGroup& g) const;

  /// Equality as functions (verbatim exponents).
  bool operator==(const ClassAssignedFunction& o) const { return exponents_ == o.exponents_; }

 private:
  std::shared_ptr<const RClassPartition> partition_;
  std::vector<std::uint64_t> exponents_;
};

inline std::uint64_t evaluate(const ClassAssignedFunction& k, Index x) { return k(x); }
inline ClassAssignedFunction canonicalize(const ClassAssignedFunction& k) { return k.canonical(); }

/// w -> w^{k(w)}.
std::vector<Index> induced_map(const FiniteGroup& g, const ClassAssignedFunction& k);

/// The constant exponent n off the identity, canonicalized.
ClassAssignedFunction power_map_caf(std::shared_ptr<const RClassPartition> partition, std::uint64_t n);

/// Pull-based enumeration of all canonical class assigned functions, in
/// lexicographic order of exponent vectors (last class varies fastest).
class CafEnumerator {
 public:
  explicit CafEnumerator(std::shared_ptr<const RClassPartition> partition);

  std::optional<ClassAssignedFunction> next();
  /// Total number of functions the enumerator yields. Saturates at UINT64_MAX.
  std::uint64_t count() const;

 private:
  std::shared_ptr<const RClassPartition> partition_;
  std::vector<std::uint64_t> current_;
  bool done_ = false;
};

inline CafEnumerator enumerate_cafs(std::shared_ptr<const RClassPartition> partition) {
  return CafEnumerator(std::move(partition));
}

/// Parses "(0 1):1,(0 1 2):2". Representatives are read on the group's degree;
/// classes left out default to 0. Throws ParseError on malformed text, unknown
/// elements, conflicting entries, or a nonzero identity exponent.
ClassAssignedFunction parse_kspec(std::string_view text, const FiniteGroup& g,
                                  std::shared_ptr<const RClassPartition> partition);

}  // namespace gyro
