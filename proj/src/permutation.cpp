#include "gyro/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gyro/errors.hpp"

namespace gyro {

namespace {

bool is_identity_token(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      compact += c;
  return compact == "e" || compact == "()";
}

// Splits "(0 1)(2 3)" into point lists; throws ParseError on anything else.
std::vector<std::vector<Point>> split_cycles(std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i == text.size())
    throw ParseError("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation: \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size())
        throw ParseError("unterminated cycle: \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character '" + std::string(1, text[i]) +
                         "' in cycle notation: \"" + std::string(text) + "\"");
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 1'000'000)
          throw ParseError("point out of range in \"" + std::string(text) + "\"");
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    auto sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("repeated point inside a cycle: \"" + std::string(text) + "\"");
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw std::invalid_argument("images do not form a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  if (is_identity_token(text))
    return result;
  for (const auto& cycle : split_cycles(text)) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (cycle[j] >= degree)
        throw ParseError("point " + std::to_string(cycle[j]) + " exceeds degree " +
                         std::to_string(degree));
      images[cycle[j]] = cycle[(j + 1) % cycle.size()];
    }
    result = compose(result, Permutation(std::move(images)));
  }
  return result;
}

Permutation Permutation::parse(std::string_view text) {
  if (is_identity_token(text))
    return Permutation(1);
  Point largest = 0;
  for (const auto& cycle : split_cycles(text))
    for (Point p : cycle)
      largest = std::max(largest, p);
  return from_cycles(text, std::size_t{largest} + 1);
}

Permutation Permutation::inverse() const {
  std::vector<Point> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    images[images_[i]] = static_cast<Point>(i);
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  for (const auto& c : cycles())
    result = std::lcm(result, c.size());
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "e";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t j = 0; j < c.size(); ++j)
      os << (j ? " " : "") << c[j];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (Point i = 0; i < p.degree(); ++i)
    images[i] = q(p(i));
  return Permutation(std::move(images));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_cycle_string();
}

}  // namespace gyro
