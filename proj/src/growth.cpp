#include "germdyn/growth.hpp"

#include "germdyn/errors.hpp"

#include <cmath>
#include <fstream>

namespace germdyn {

namespace {

[[noreturn]] void too_big(const std::string& what) {
  throw BudgetExceeded("growth value " + what + " exceeds the bit budget");
}

}  // namespace

GrowthSpec GrowthSpec::power(Integer base) {
  if (base < 0) throw PreconditionFailed("pow base must be nonnegative");
  GrowthSpec g;
  g.kind_ = Kind::power;
  g.name_ = "pow:" + base.str();
  g.param_ = std::move(base);
  return g;
}

GrowthSpec GrowthSpec::factorial() {
  GrowthSpec g;
  g.kind_ = Kind::factorial;
  g.name_ = "factorial";
  return g;
}

GrowthSpec GrowthSpec::tower(Integer base) {
  if (base < 1) throw PreconditionFailed("tower base must be positive");
  GrowthSpec g;
  g.kind_ = Kind::tower;
  g.name_ = "tower:" + base.str();
  g.param_ = std::move(base);
  return g;
}

GrowthSpec GrowthSpec::table(std::vector<Integer> values) {
  if (values.empty()) throw PreconditionFailed("growth table is empty");
  for (const auto& v : values)
    if (v < 0) throw PreconditionFailed("growth table values must be nonnegative");
  GrowthSpec g;
  g.kind_ = Kind::table;
  g.name_ = "table";
  g.table_ = std::move(values);
  return g;
}

GrowthSpec GrowthSpec::constant(Integer c) {
  if (c < 0) throw PreconditionFailed("constant growth must be nonnegative");
  GrowthSpec g;
  g.kind_ = Kind::constant;
  g.name_ = "const:" + c.str();
  g.param_ = std::move(c);
  return g;
}

GrowthSpec GrowthSpec::parse(std::string_view text) {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto need_arg = [&] {
    if (colon == std::string_view::npos || arg.empty())
      throw ParseError("growth preset '" + std::string(head) + "' needs an argument", text.size());
  };
  try {
    if (head == "pow") {
      need_arg();
      return power(parse_integer(arg));
    }
    if (head == "tower") {
      need_arg();
      return tower(parse_integer(arg));
    }
    if (head == "const") {
      need_arg();
      return constant(parse_integer(arg));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const PreconditionFailed& e) {
    throw ParseError(e.what(), colon + 1);
  }
  if (head == "factorial" && colon == std::string_view::npos) return factorial();
  if (head == "table") {
    need_arg();
    std::ifstream in{std::string(arg)};
    if (!in) throw ParseError("cannot read growth table '" + std::string(arg) + "'", colon + 1);
    std::vector<Integer> values;
    std::string line;
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      auto last = line.find_last_not_of(" \t\r");
      values.push_back(parse_integer(std::string_view(line).substr(first, last - first + 1)));
    }
    if (values.empty()) throw ParseError("growth table '" + std::string(arg) + "' is empty", colon + 1);
    return table(std::move(values));
  }
  throw ParseError("unknown growth preset '" + std::string(text) + "'", 0);
}

Integer GrowthSpec::operator()(const Integer& n, std::uint64_t max_bits) const {
  if (n < 0) throw PreconditionFailed("growth argument must be nonnegative");
  switch (kind_) {
    case Kind::constant:
      return param_;
    case Kind::table: {
      if (n >= table_.size())
        throw PreconditionFailed("growth table has no entry for n = " + n.str());
      return table_[static_cast<std::size_t>(static_cast<unsigned long>(n))];
    }
    case Kind::power: {
      if (param_ <= 1) return n == 0 ? Integer(1) : param_;
      // bits of b^n is about n*log2(b)
      double est = static_cast<double>(n) * std::log2(static_cast<double>(param_));
      if (est > static_cast<double>(max_bits)) too_big(name_ + "(" + n.str() + ")");
      return ipow(param_, static_cast<std::uint64_t>(n));
    }
    case Kind::factorial: {
      // log2(n!) < n log2 n
      double nd = static_cast<double>(n);
      if (nd > 2 && nd * std::log2(nd) > static_cast<double>(max_bits))
        too_big("factorial(" + n.str() + ")");
      Integer r = 1;
      for (Integer k = 2; k <= n; ++k) r *= k;
      return r;
    }
    case Kind::tower: {
      Integer r = 1;
      for (Integer k = 0; k < n; ++k) {
        if (param_ == 1) return 1;
        double est = static_cast<double>(r) * std::log2(static_cast<double>(param_));
        if (est > static_cast<double>(max_bits)) too_big(name_ + "(" + n.str() + ")");
        r = ipow(param_, static_cast<std::uint64_t>(r));
      }
      return r;
    }
  }
  return 0;
}

}  // namespace germdyn
