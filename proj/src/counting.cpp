#include "gyro/counting.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gyro/class_functions.hpp"
#include "gyro/errors.hpp"

namespace gyro {

namespace {

void extend(std::vector<unsigned>& parts, unsigned min_part, unsigned remaining, unsigned degree,
            std::vector<CycleType>& out) {
  for (unsigned p = min_part; p <= remaining; ++p) {
    parts.push_back(p);
    out.push_back({parts, degree});
    extend(parts, p, remaining - p, degree, out);
    parts.pop_back();
  }
}

}  // namespace

std::size_t CycleType::lcm() const {
  std::size_t result = 1;
  for (unsigned p : parts)
    result = std::lcm(result, std::size_t{p});
  return result;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i)
    os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

std::vector<CycleType> cycle_types(unsigned n) {
  std::vector<CycleType> out;
  std::vector<unsigned> parts;
  extend(parts, 2, n, n, out);
  std::stable_sort(out.begin(), out.end(), [](const CycleType& a, const CycleType& b) {
    if (a.parts.size() != b.parts.size())
      return a.parts.size() < b.parts.size();
    return a.parts < b.parts;
  });
  return out;
}

BigInt count_gyrotransversals(unsigned n) {
  if (n > kMaxFormulaDegree)
    throw std::invalid_argument("degree " + std::to_string(n) + " exceeds the supported maximum of " +
                                std::to_string(kMaxFormulaDegree));
  if (n < 3)
    return 1;
  BigInt total = 1;
  for (const auto& t : cycle_types(n))
    total *= t.lcm();
  return total;
}

BigInt brute_count(const FiniteGroup& g) {
  if (g.order() > kBruteCountCap)
    throw CapExceeded("brute count is capped at order " + std::to_string(kBruteCountCap));
  auto partition = std::make_shared<const RClassPartition>(g);
  CafEnumerator it(partition);
  BigInt total = 0;
  while (it.next())
    ++total;
  return total;
}

}  // namespace gyro
