#pragma once

#include "germdyn/arith.hpp"

#include <cstddef>
#include <string>

namespace germdyn {

/// Lowest exponent with a nonzero coefficient in a truncated series. When all
/// known coefficients vanish, `determined` is false and `value` is the
/// truncation order: a lower bound, not a value.
struct TruncOrder {
  std::size_t value = 0;
  bool determined = false;

  static TruncOrder exact(std::size_t v) { return {v, true}; }
  static TruncOrder at_least(std::size_t v) { return {v, false}; }
  friend bool operator==(const TruncOrder&, const TruncOrder&) = default;
};

/// An intersection number that is exact, only bounded below, or infinite.
class Multiplicity {
 public:
  enum class Kind { exact, at_least, infinite };

  static Multiplicity exact(Integer v) { return Multiplicity(Kind::exact, std::move(v)); }
  static Multiplicity at_least(Integer v) { return Multiplicity(Kind::at_least, std::move(v)); }
  static Multiplicity infinite() { return Multiplicity(Kind::infinite, Integer(0)); }

  Kind kind() const noexcept { return kind_; }
  bool is_exact() const noexcept { return kind_ == Kind::exact; }
  bool is_infinite() const noexcept { return kind_ == Kind::infinite; }
  /// The exact value, or the lower bound for `at_least`. Zero for `infinite`.
  const Integer& value() const noexcept { return value_; }

  friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
    return a.kind_ == b.kind_ && a.value_ == b.value_;
  }

 private:
  Multiplicity(Kind k, Integer v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  Integer value_;
};

inline std::string to_string(const Multiplicity& m) {
  switch (m.kind()) {
    case Multiplicity::Kind::exact: return to_string(m.value());
    case Multiplicity::Kind::at_least: return ">=" + to_string(m.value());
    case Multiplicity::Kind::infinite: return "infinite";
  }
  return {};
}

}  // namespace germdyn
