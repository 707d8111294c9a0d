#include "gyro/group_registry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "gyro/errors.hpp"
#include "gyro/isomorphism.hpp"

namespace gyro {

namespace {

Permutation cycle_on(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>((i + 1) % degree);
  return Permutation(std::move(images));
}

Permutation swap_on(std::size_t degree, Point a, Point b) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

std::vector<Permutation> symmetric_gens(std::size_t n) {
  if (n <= 1)
    return {Permutation(1)};
  return {swap_on(n, 0, 1), cycle_on(n)};
}

std::vector<Permutation> alternating_gens(std::size_t n) {
  if (n <= 2)
    return {Permutation(std::max<std::size_t>(n, 1))};
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k) {
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), Point{0});
    images[0] = 1;
    images[1] = k;
    images[k] = 0;
    gens.emplace_back(std::move(images));
  }
  return gens;
}

std::vector<Permutation> dihedral_gens(std::size_t n) {
  if (n == 1)
    return {swap_on(2, 0, 1)};
  if (n == 2)
    return {Permutation::from_cycles("(0 1)(2 3)", 4), Permutation::from_cycles("(0 2)(1 3)", 4)};
  std::vector<Point> reflect(n);
  for (std::size_t i = 0; i < n; ++i)
    reflect[i] = static_cast<Point>((n - i) % n);
  return {cycle_on(n), Permutation(std::move(reflect))};
}

std::vector<Permutation> cyclic_gens(std::size_t n) {
  if (n <= 1)
    return {Permutation(1)};
  return {cycle_on(n)};
}

// Left-regular representation of the quaternion group on
// {1, i, j, k, -1, -i, -j, -k} (indices 0..7).
std::vector<Permutation> quaternion_gens() {
  // unit products: units 0=1, 1=i, 2=j, 3=k; result (sign, unit)
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto left_mult = [](int unit) {
    std::vector<Point> images(8);
    for (int x = 0; x < 8; ++x) {
      int xs = x < 4 ? 1 : -1, xu = x % 4;
      int s = xs * kSign[unit][xu], u = kUnit[unit][xu];
      images[x] = static_cast<Point>(s > 0 ? u : u + 4);
    }
    return Permutation(std::move(images));
  };
  return {left_mult(1), left_mult(2)};
}

std::size_t parse_size(std::string_view digits, std::string_view name) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || n == 0 || n > 64)
    throw ParseError("unknown group \"" + std::string(name) + "\"");
  return n;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

FiniteGroup named_group(std::string_view raw, std::size_t cap) {
  const std::string name = trim(raw);
  if (name == "Q8")
    return FiniteGroup::from_generators(quaternion_gens(), cap);
  if (name.size() < 2)
    throw ParseError("unknown group \"" + name + "\"");
  const std::size_t n = parse_size(std::string_view(name).substr(1), name);
  switch (name.front()) {
    case 'S':
      return FiniteGroup::from_generators(symmetric_gens(n), cap);
    case 'A':
      return FiniteGroup::from_generators(alternating_gens(n), cap);
    case 'D':
      return FiniteGroup::from_generators(dihedral_gens(n), cap);
    case 'C':
      return FiniteGroup::from_generators(cyclic_gens(n), cap);
    default:
      throw ParseError("unknown group \"" + name + "\"");
  }
}

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(')
      ++depth;
    else if (c == ')')
      --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(trim(current));
  return parts;
}

FiniteGroup parse_group_spec(std::string_view raw, std::size_t cap) {
  const std::string spec = trim(raw);
  constexpr std::string_view kPrefix = "gens:";
  if (spec.rfind(kPrefix, 0) != 0)
    return named_group(spec, cap);

  auto texts = split_top_level(std::string_view(spec).substr(kPrefix.size()));
  std::size_t degree = 1;
  for (const auto& t : texts) {
    if (t.empty())
      throw ParseError("empty generator in \"" + spec + "\"");
    degree = std::max(degree, Permutation::parse(t).degree());
  }
  std::vector<Permutation> gens;
  for (const auto& t : texts)
    gens.push_back(Permutation::from_cycles(t, degree));
  return FiniteGroup::from_generators(gens, cap);
}

std::optional<std::string> identify_small_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 24)
    return std::nullopt;
  std::vector<std::string> candidates{"C" + std::to_string(n)};
  if (n % 2 == 0 && n >= 4)
    candidates.push_back("D" + std::to_string(n / 2));
  if (n == 8)
    candidates.push_back("Q8");
  if (n == 12)
    candidates.push_back("A4");
  if (n == 24)
    candidates.push_back("S4");
  for (const auto& name : candidates) {
    auto h = named_group(name, 24);
    if (h.order() == n && tables_isomorphic(g.table(), h.table()))
      return name == "D2" ? std::string("C2xC2") : name == "D3" ? std::string("S3") : name;
  }
  return std::nullopt;
}

}  // namespace gyro
