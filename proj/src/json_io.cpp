#include "germdyn/json_io.hpp"

namespace germdyn {

Json to_json(const Integer& v) { return v.str(); }

Json to_json(const Rational& v) { return to_string(v); }

Json to_json(const Dyadic& d) {
  return Json{{"num", d.numerator().str()}, {"exp2", d.exponent()}};
}

Json to_json(const USeries<Dyadic>& s) {
  Json a = Json::array();
  for (std::size_t k = 0; k < s.trunc(); ++k)
    a.push_back(Json{{"index", k}, {"coefficient", to_json(s[k])}});
  return a;
}

Json to_json(const BiPoly& p) {
  Json a = Json::array();
  for (const auto& [m, c] : p.terms())
    a.push_back(Json{{"i", m.i}, {"j", m.j}, {"coefficient", to_json(c)}});
  return a;
}

Json to_json(const Multiplicity& m) {
  switch (m.kind()) {
    case Multiplicity::Kind::exact: return Json{{"kind", "exact"}, {"value", to_json(m.value())}};
    case Multiplicity::Kind::at_least: return Json{{"kind", "at_least"}, {"value", to_json(m.value())}};
    case Multiplicity::Kind::infinite: return Json{{"kind", "infinite"}, {"value", nullptr}};
  }
  return {};
}

Json to_json(const Witness& w) {
  return Json{{"n", to_json(w.n)}, {"M", to_json(w.M)}, {"nu", to_json(w.nu)},
              {"mu_digits", to_json(w.mu_digits)}};
}

Json to_json(const RecurrenceModel& m) {
  return Json{{"order", m.order},
              {"coeffs", to_json(m.coeffs)},
              {"onset", m.onset},
              {"char_poly", to_string(m.char_poly())},
              {"lead", to_json(m.lead)}};
}

Json to_json(const RootBracket& b) {
  Json j{{"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}};
  j["exact"] = b.exact ? to_json(*b.exact) : Json(nullptr);
  return j;
}

namespace {

template <class M>
Json matrix_json(const M& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json to_json(const IntegerMatrix& m) { return matrix_json(m); }
Json to_json(const RationalMatrix& m) { return matrix_json(m); }

Json to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

}  // namespace germdyn
