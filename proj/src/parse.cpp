#include "germdyn/parse.hpp"

#include "germdyn/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <string>

namespace germdyn {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(normalize(text)) {}

  BiPoly parse_all() {
    BiPoly p = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  /// Top-level comma-separated expressions.
  std::vector<BiPoly> parse_list() {
    skip();
    bool wrapped = false;
    if (peek() == '(' && wrapped_list()) {
      wrapped = true;
      ++pos_;
    }
    std::vector<BiPoly> out{expr()};
    while (skip(), peek() == ',') {
      ++pos_;
      out.push_back(expr());
    }
    if (wrapped) expect(')');
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  static std::string normalize(std::string_view text) {
    // Accept the unicode minus sign.
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
        out += '-';
        i += 2;
      } else {
        out += text[i];
      }
    }
    return out;
  }

  // The list is wrapped when the opening parenthesis closes at the very end
  // and contains a top-level comma.
  bool wrapped_list() const {
    int depth = 0;
    bool comma = false;
    for (std::size_t i = pos_; i < s_.size(); ++i) {
      char c = s_[i];
      if (c == '(') ++depth;
      else if (c == ')') {
        if (--depth == 0) {
          for (std::size_t j = i + 1; j < s_.size(); ++j)
            if (!std::isspace(static_cast<unsigned char>(s_[j]))) return false;
          return comma;
        }
      } else if (c == ',' && depth == 1) {
        comma = true;
      }
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      BiPoly t = term();
      if (c == '+') acc += t;
      else acc -= t;
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    for (;;) {
      skip();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        skip();
        std::size_t at = pos_;
        BiPoly d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        if (d.degree().value_or(0) > 0) throw ParseError("division by a non-constant", at);
        acc *= Rational(1) / d.constant_term();
      } else if (c == 'x' || c == 'y' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        acc *= power();  // implicit product, e.g. 2x or x(y+1)
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    skip();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    std::string digits = s_.substr(start, pos_ - start);
    if (digits.size() > 6) throw ParseError("exponent too large", start);
    return pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  BiPoly atom() {
    skip();
    char c = peek();
    if (c == 'x') {
      ++pos_;
      return BiPoly::x();
    }
    if (c == 'y') {
      ++pos_;
      return BiPoly::y();
    }
    if (c == '(') {
      ++pos_;
      BiPoly e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  BiPoly number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    Integer whole = parse_integer(s_.substr(start, pos_ - start));
    if (peek() != '.') return BiPoly(Rational(whole));
    ++pos_;
    std::size_t frac_start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (frac_start == pos_) fail("expected digits after '.'");
    std::string frac = s_.substr(frac_start, pos_ - frac_start);
    Integer scale = ipow(Integer(10), frac.size());
    return BiPoly(Rational(whole * scale + parse_integer(frac), scale));
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view text) { return PolyParser(text).parse_all(); }

std::vector<BiPoly> parse_poly_list(std::string_view text) { return PolyParser(text).parse_list(); }

MapGerm parse_map(std::string_view text) {
  auto parts = parse_poly_list(text);
  if (parts.size() != 2)
    throw ParseError("a map needs exactly two components, got " + std::to_string(parts.size()), 0);
  return MapGerm(parts[0], parts[1]);
}

MonomialIdeal2 parse_monomial_ideal(std::string_view text) {
  std::vector<Exponent> gens;
  for (const auto& p : parse_poly_list(text)) {
    if (p.term_count() != 1) throw ParseError("ideal generator " + to_string(p) + " is not a monomial", 0);
    const auto& [m, c] = *p.terms().begin();
    gens.push_back({m.i, m.j});
  }
  return MonomialIdeal2(gens);
}

ProximityChart parse_chart(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid chart JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!j.is_object() || !j.contains("points") || !j["points"].is_number_unsigned())
    throw MalformedChart("chart needs a nonnegative integer \"points\"");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (j.contains("proximate")) {
    if (!j["proximate"].is_array()) throw MalformedChart("\"proximate\" must be an array");
    for (const auto& e : j["proximate"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
        throw MalformedChart("each proximity entry must be a pair [i, j] of positive integers");
      pairs.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
  }
  char axis = 'x';
  if (j.contains("axis")) {
    if (!j["axis"].is_string()) throw MalformedChart("\"axis\" must be \"x\" or \"y\"");
    std::string a = j["axis"];
    if (a != "x" && a != "y") throw MalformedChart("\"axis\" must be \"x\" or \"y\"");
    axis = a[0];
  }
  return ProximityChart(j["points"].get<std::size_t>(), pairs, axis);
}

}  // namespace germdyn
