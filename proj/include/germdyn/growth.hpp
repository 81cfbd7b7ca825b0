#pragma once

// Integer-valued growth functions nu: N -> N, from a small preset family.

#include "germdyn/arith.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace germdyn {

class GrowthSpec {
 public:
  enum class Kind { power, factorial, tower, table, constant };

  /// "pow:b", "factorial", "tower:b", "table:<path>", "const:c".
  static GrowthSpec parse(std::string_view text);
  static GrowthSpec power(Integer base);
  static GrowthSpec factorial();
  static GrowthSpec tower(Integer base);
  static GrowthSpec table(std::vector<Integer> values);
  static GrowthSpec constant(Integer c);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

  /// nu(n). Throws BudgetExceeded when the value would need more than
  /// `max_bits` bits, PreconditionFailed when n is past the end of a table.
  Integer operator()(const Integer& n, std::uint64_t max_bits = kDefaultMaxBits) const;

  static constexpr std::uint64_t kDefaultMaxBits = std::uint64_t{1} << 26;

 private:
  Kind kind_ = Kind::constant;
  Integer param_;
  std::vector<Integer> table_;
  std::string name_;
};

}  // namespace germdyn
