#include "germdyn/bipoly.hpp"

#include "germdyn/errors.hpp"

#include <algorithm>
#include <vector>

namespace germdyn {

BiPoly::BiPoly(Rational c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, std::move(c));
}

BiPoly BiPoly::x() { return monomial(1, 0); }
BiPoly BiPoly::y() { return monomial(0, 1); }

BiPoly BiPoly::monomial(std::uint32_t i, std::uint32_t j, Rational c) {
  BiPoly p;
  if (c != 0) p.terms_.emplace(Monomial{i, j}, std::move(c));
  return p;
}

Rational BiPoly::coeff(std::uint32_t i, std::uint32_t j) const {
  auto it = terms_.find(Monomial{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::uint32_t> BiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.i + m.j);
  return d;
}

std::optional<std::uint32_t> BiPoly::order() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = UINT32_MAX;
  for (const auto& [m, c] : terms_) d = std::min(d, m.i + m.j);
  return d;
}

int BiPoly::degree_x() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.i);
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.j));
  return d;
}

void BiPoly::add_term(std::uint32_t i, std::uint32_t j, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.i, m.j, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.i, m.j, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = mul(*this, o); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) { return mul(a, b); }

BiPoly mul(const BiPoly& a, const BiPoly& b, std::size_t term_budget) {
  BiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.term_count() == 1 || b.term_count() == 1) {
    const BiPoly& mono = a.term_count() == 1 ? a : b;
    const BiPoly& other = a.term_count() == 1 ? b : a;
    const auto& [m, c] = *mono.terms().begin();
    for (const auto& [n, d] : other.terms()) r.add_term(m.i + n.i, m.j + n.j, c * d);
    return r;
  }
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [n, d] : b.terms()) r.add_term(m.i + n.i, m.j + n.j, c * d);
    if (r.term_count() > term_budget)
      throw BudgetExceeded("polynomial product exceeds the term budget of " +
                           std::to_string(term_budget));
  }
  return r;
}

BiPoly pow(const BiPoly& p, unsigned k, std::size_t term_budget) {
  BiPoly result(1);
  BiPoly base = p;
  while (k) {
    if (k & 1) result = mul(result, base, term_budget);
    k >>= 1;
    if (k) base = mul(base, base, term_budget);
  }
  return result;
}

BiPoly compose(const BiPoly& p, const BiPoly& f1, const BiPoly& f2, std::size_t term_budget) {
  if (p.is_zero()) return p;
  // P = sum_i x^i p_i(y): evaluate each p_i at F2 by Horner, then Horner in F1.
  const int dx = p.degree_x();
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows(dx + 1);
  for (const auto& [m, c] : p.terms()) rows[m.i].emplace_back(m.j, c);

  auto horner_y = [&](const std::vector<std::pair<std::uint32_t, Rational>>& row) {
    BiPoly acc;
    if (row.empty()) return acc;
    // row is sorted by ascending j.
    std::uint32_t deg = row.back().first;
    std::size_t idx = row.size();
    for (std::uint32_t j = deg + 1; j-- > 0;) {
      if (!acc.is_zero()) acc = mul(acc, f2, term_budget);
      if (idx > 0 && row[idx - 1].first == j) {
        acc += BiPoly(row[idx - 1].second);
        --idx;
      }
    }
    return acc;
  };

  BiPoly acc;
  for (int i = dx; i >= 0; --i) {
    if (!acc.is_zero()) acc = mul(acc, f1, term_budget);
    acc += horner_y(rows[i]);
    if (acc.term_count() > term_budget)
      throw BudgetExceeded("composition exceeds the term budget of " + std::to_string(term_budget));
  }
  return acc;
}

UPoly<Rational> restrict_y0(const BiPoly& p) {
  std::vector<Rational> v(p.degree_x() + 1);
  for (const auto& [m, c] : p.terms())
    if (m.j == 0) v[m.i] = c;
  return UPoly<Rational>(std::move(v));
}

UPoly<Rational> coefficient_in_x(const BiPoly& p, std::uint32_t k) {
  std::vector<Rational> v(std::max(p.degree_y(), 0) + 1);
  for (const auto& [m, c] : p.terms())
    if (m.i == k) v[m.j] = c;
  return UPoly<Rational>(std::move(v));
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    auto da = a.first.i + a.first.j, db = b.first.i + b.first.j;
    if (da != db) return da > db;
    return a.first.i > b.first.i;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (m.i > 0) mono += m.i == 1 ? "x" : "x^" + std::to_string(m.i);
    if (m.j > 0) {
      if (!mono.empty()) mono += "*";
      mono += m.j == 1 ? "y" : "y^" + std::to_string(m.j);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace germdyn
