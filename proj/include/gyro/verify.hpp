#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gyro/class_functions.hpp"
#include "gyro/finite_group.hpp"
#include "gyro/gen_product.hpp"
#include "gyro/op_table.hpp"

namespace gyro {

inline constexpr std::size_t kDefaultGyrationGroupCap = 1000;

/// f(y, z): the map x -> x' with (x o y) o z = x' o (y o z).
struct Gyration {
  Index y = 0;
  Index z = 0;
  std::vector<Index> action;

  bool is_identity() const;
};

/// Inverts the right translation by y o z. Throws Error if that translation
/// is not a bijection.
Gyration solve_gyration(const OpTable& loop, Index y, Index z);

/// y^{k(y)} (yz)^{-k(y o_k z)} z^{k(z)}, yz being the group product.
Index closed_form_conjugator(const FiniteGroup& g, const ClassAssignedFunction& k, Index y, Index z);

/// x -> a^-1 x a with a = closed_form_conjugator(g, k, y, z).
Gyration closed_form_gyration(const FiniteGroup& g, const ClassAssignedFunction& k, Index y, Index z);

/// p(x o y) = p(x) o p(y) for all x, y; the witness holds x in `x` and y in `h`.
CriterionResult is_automorphism(const OpTable& loop, std::span<const Index> p);

struct FlagWitness {
  std::vector<Index> elements;
  std::string detail;
};

/// Outcome of checking every right gyrogroup axiom on a table.
struct GyroReport {
  bool right_identity = false;
  bool right_inverses = false;
  bool gyrations_exist_unique = false;
  bool gyrations_automorphisms = false;
  bool gyration_of_inverse_trivial = false;
  /// Not an axiom: true iff every gyration is the identity.
  bool associative = false;
  std::map<std::string, FlagWitness> witnesses;
  std::size_t gyration_group_order = 0;
  bool gyration_group_abelian = false;

  bool is_right_gyrogroup() const {
    return right_identity && right_inverses && gyrations_exist_unique && gyrations_automorphisms &&
           gyration_of_inverse_trivial;
  }
  bool operator==(const GyroReport&) const;
};

struct GyroVerifyOptions {
  /// Also confirm uniqueness by direct search over all (x, y, z, s).
  bool uniqueness_sweep = false;
  std::size_t gyration_group_cap = kDefaultGyrationGroupCap;
};

GyroReport verify_right_gyrogroup(const OpTable& loop, GyroVerifyOptions options = {});

/// All |L|^2 gyrations, row-major in (y, z).
std::vector<Gyration> all_gyrations(const OpTable& loop);

/// Group generated by all gyrations, as permutations of the loop elements.
FiniteGroup gyration_group(const OpTable& loop, std::size_t cap = kDefaultGyrationGroupCap);

struct GroupSummary {
  std::size_t order = 0;
  bool abelian = true;
  std::size_t exponent = 1;
  std::map<std::size_t, std::size_t> order_histogram;
  std::optional<std::string> name;
};

GroupSummary summarize(const FiniteGroup& g);

}  // namespace gyro
