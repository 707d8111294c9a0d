#include "gyro/class_functions.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gyro/errors.hpp"
#include "gyro/group_registry.hpp"

namespace gyro {

RClassPartition::RClassPartition(const FiniteGroup& g) : class_of_(g.order()) {
  const std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::fill(class_of_.begin(), class_of_.end(), unset);
  for (Index x = 0; x < g.order(); ++x) {
    if (class_of_[x] != unset)
      continue;
    const std::size_t id = classes_.size();
    std::vector<Index> members;
    for (Index a = 0; a < g.order(); ++a)
      for (Index y : {g.conjugate(x, a), g.conjugate(g.inv(x), a)})
        if (class_of_[y] == unset) {
          class_of_[y] = id;
          members.push_back(y);
        }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
    orders_.push_back(g.element_order(x));
  }
}

ClassAssignedFunction::ClassAssignedFunction(std::shared_ptr<const RClassPartition> partition,
                                             std::vector<std::uint64_t> exponents)
    : partition_(std::move(partition)), exponents_(std::move(exponents)) {
  if (!partition_)
    throw std::invalid_argument("class assigned function needs a partition");
  if (exponents_.size() != partition_->size())
    throw std::invalid_argument("expected " + std::to_string(partition_->size()) +
                                " class exponents, got " + std::to_string(exponents_.size()));
  if (exponents_[partition_->identity_class()] != 0)
    throw std::invalid_argument("the identity class must have exponent 0");
}

ClassAssignedFunction ClassAssignedFunction::zero(std::shared_ptr<const RClassPartition> partition) {
  std::vector<std::uint64_t> e(partition->size(), 0);
  return ClassAssignedFunction(std::move(partition), std::move(e));
}

ClassAssignedFunction ClassAssignedFunction::canonical() const {
  auto e = exponents_;
  for (std::size_t c = 0; c < e.size(); ++c)
    e[c] %= partition_->class_order(c);
  return ClassAssignedFunction(partition_, std::move(e));
}

bool ClassAssignedFunction::is_canonical() const {
  for (std::size_t c = 0; c < exponents_.size(); ++c)
    if (exponents_[c] >= partition_->class_order(c))
      return false;
  return true;
}

std::string ClassAssignedFunction::to_spec(const FiniteGroup& g) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t c = 1; c < exponents_.size(); ++c) {
    if (exponents_[c] == 0)
      continue;
    os << (first ? "" : ",") << g.element(partition_->representative(c)) << ':' << exponents_[c];
    first = false;
  }
  return first ? std::string("0") : os.str();
}

std::vector<Index> induced_map(const FiniteGroup& g, const ClassAssignedFunction& k) {
  std::vector<Index> map(g.order());
  for (Index w = 0; w < g.order(); ++w)
    map[w] = g.power(w, static_cast<std::int64_t>(k(w) % g.element_order(w)));
  return map;
}

ClassAssignedFunction power_map_caf(std::shared_ptr<const RClassPartition> partition, std::uint64_t n) {
  std::vector<std::uint64_t> e(partition->size(), n);
  e[partition->identity_class()] = 0;
  return ClassAssignedFunction(std::move(partition), std::move(e)).canonical();
}

CafEnumerator::CafEnumerator(std::shared_ptr<const RClassPartition> partition)
    : partition_(std::move(partition)), current_(partition_->size(), 0) {}

std::optional<ClassAssignedFunction> CafEnumerator::next() {
  if (done_)
    return std::nullopt;
  ClassAssignedFunction result(partition_, current_);
  // odometer over classes 1..size-1, last class fastest
  done_ = true;
  for (std::size_t c = current_.size(); c-- > 1;) {
    if (++current_[c] < partition_->class_order(c)) {
      done_ = false;
      break;
    }
    current_[c] = 0;
  }
  return result;
}

std::uint64_t CafEnumerator::count() const {
  std::uint64_t total = 1;
  for (std::size_t c = 1; c < partition_->size(); ++c) {
    const std::uint64_t o = partition_->class_order(c);
    if (total > std::numeric_limits<std::uint64_t>::max() / o)
      return std::numeric_limits<std::uint64_t>::max();
    total *= o;
  }
  return total;
}

ClassAssignedFunction parse_kspec(std::string_view text, const FiniteGroup& g,
                                  std::shared_ptr<const RClassPartition> partition) {
  std::vector<std::uint64_t> exponents(partition->size(), 0);
  std::vector<bool> given(partition->size(), false);
  std::string trimmed(text);
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  if (trimmed.empty() || trimmed == "0")
    return ClassAssignedFunction(std::move(partition), std::move(exponents));

  for (const auto& entry : split_top_level(text)) {
    const auto colon = entry.rfind(':');
    if (colon == std::string::npos)
      throw ParseError("k entry \"" + entry + "\" is not of the form representative:exponent");
    std::string exp_text = entry.substr(colon + 1);
    exp_text.erase(0, exp_text.find_first_not_of(" \t"));
    exp_text.erase(exp_text.find_last_not_of(" \t") + 1);
    std::uint64_t exponent = 0;
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (exp_text.empty() || ec != std::errc() || ptr != exp_text.data() + exp_text.size())
      throw ParseError("bad exponent \"" + exp_text + "\" in k entry \"" + entry + "\"");

    const auto element = Permutation::from_cycles(entry.substr(0, colon), g.degree());
    const auto idx = g.index_of(element);
    if (!idx)
      throw ParseError("k entry \"" + entry + "\" names an element outside the group");
    const std::size_t c = partition->class_of(*idx);
    if (c == partition->identity_class() && exponent != 0)
      throw ParseError("the identity class must have exponent 0");
    if (given[c] && exponents[c] != exponent)
      throw ParseError("conflicting exponents for the class of " + element.to_cycle_string());
    given[c] = true;
    exponents[c] = exponent;
  }
  return ClassAssignedFunction(std::move(partition), std::move(exponents));
}

}  // namespace gyro
