#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gyro/op_table.hpp"

namespace gyro {

/// Either a structure-preserving bijection or the reason none exists.
struct IsoCertificate {
  std::optional<std::vector<Index>> mapping;
  std::string reason;

  explicit operator bool() const { return mapping.has_value(); }
};

/// Exact search for a bijection phi with phi(identity_a) = identity_b and
/// phi(x o y) = phi(x) o phi(y). Candidates are pruned by per-element
/// invariants and assignments are propagated through products. Equal tables
/// get the identity certificate.
IsoCertificate tables_isomorphic(const OpTable& a, const OpTable& b);

bool is_isomorphism(const OpTable& a, const OpTable& b, std::span<const Index> mapping);

}  // namespace gyro
