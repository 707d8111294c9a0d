#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gyro {

using Point = std::uint32_t;

/// Bijection on {0, ..., degree-1} in one-line notation.
///
/// Products are read left to right: (p * q)(i) = q(p(i)), i.e. p acts first.
/// The same convention is used by the cycle parser, so "(0 1)(1 2)" is the
/// product (0 1) * (1 2) = (0 2 1).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  /// Parses "(0 1)(2 3)" or "e" on exactly `degree` points.
  static Permutation from_cycles(std::string_view text, std::size_t degree);
  /// As above, with degree one past the largest point mentioned.
  static Permutation parse(std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

/// p then q. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace gyro
