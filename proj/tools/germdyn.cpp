// Command-line front end. Every command builds a JSON report; --format
// selects json, csv or text rendering of it.

#include "germdyn/cantor.hpp"
#include "germdyn/errors.hpp"
#include "germdyn/intersect.hpp"
#include "germdyn/json_io.hpp"
#include "germdyn/monomial.hpp"
#include "germdyn/parse.hpp"
#include "germdyn/proximity.hpp"
#include "germdyn/recurrence.hpp"
#include "germdyn/valuation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace germdyn;

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  Json report = Json::object();
  bool pass = true;
  std::optional<Table> table;
};

struct Globals {
  std::uint64_t seed = 7;
  std::string format = "json";
  std::string out;
  std::size_t budget = kDefaultTermBudget;
};

Globals g;
std::string stage;  // pipeline stage for error reports

// ---- small input helpers ---------------------------------------------------

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    try {
      out.push_back(parse_integer(item));
    } catch (const Error&) {
      throw ParseError("expected an integer, got '" + item + "'", start);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string read_text(const std::string& value) {
  std::string t = value;
  t.erase(0, t.find_first_not_of(" \t\n"));
  if (!t.empty() && t[0] == '{') return value;
  std::ifstream in(value);
  if (!in) throw ParseError("cannot read chart file '" + value + "'", 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dyadic_value(const Dyadic& d) { return to_string(d.to_rational()); }

std::string mult_text(const Multiplicity& m) { return to_string(m); }

bool consistent(const Multiplicity& formula, const Multiplicity& coeff) {
  if (formula.is_exact()) return coeff.is_exact() && coeff.value() == formula.value();
  if (formula.is_infinite()) return !coeff.is_exact();
  // formula only bounded below: a coefficientwise value must respect the bound
  return !coeff.is_exact() || coeff.value() >= formula.value();
}

Json ideal_json(const MonomialIdeal2& I) { return to_string(I); }

// ---- commands --------------------------------------------------------------

Outcome cmd_curve_coeffs(const std::string& seq, std::size_t n) {
  BitSeq s = parse_bitseq(seq);
  CoeffTable table;
  auto row = table.row(s, n);
  Outcome o;
  o.report["seq"] = to_string(s);
  Json coeffs = Json::array();
  Table t{{"n", "exponent", "coefficient", "value"}, {}};
  for (std::size_t k = 0; k < row.size(); ++k) {
    coeffs.push_back(Json{{"n", k}, {"exponent", 2 + 4 * k}, {"coefficient", to_json(row[k])},
                          {"value", dyadic_value(row[k])}});
    t.rows.push_back({std::to_string(k), std::to_string(2 + 4 * k), to_string(row[k]), dyadic_value(row[k])});
  }
  o.report["coefficients"] = coeffs;
  o.table = t;
  return o;
}

Outcome cmd_curve_mult(const std::vector<std::string>& pool, std::size_t n) {
  std::vector<BitSeq> seqs;
  for (const auto& p : pool) seqs.push_back(parse_bitseq(p));
  CoeffTable table;
  Outcome o;
  Json pairs = Json::array();
  Table t{{"a", "b", "formula", "coeffwise", "agree"}, {}};
  auto one = [&](std::size_t i, std::size_t j) {
    Multiplicity f = mult_formula(seqs[i], seqs[j]);
    Multiplicity c = mult_coeffwise(seqs[i], seqs[j], n, table);
    bool ok = consistent(f, c);
    o.pass = o.pass && ok;
    std::string text = mult_text(f);
    if (f.is_infinite() && seqs[i] == seqs[j]) text += " (equal sequences)";
    Json p{{"a", to_string(seqs[i])}, {"b", to_string(seqs[j])}, {"formula", to_json(f)},
           {"coeffwise", to_json(c)}, {"multiplicity", text}, {"agree", ok}};
    if (auto m = first_difference(seqs[i], seqs[j])) p["first_difference"] = to_json(*m);
    pairs.push_back(p);
    t.rows.push_back({to_string(seqs[i]), to_string(seqs[j]), text, mult_text(c), ok ? "true" : "false"});
  };
  if (seqs.size() == 2) {
    one(0, 1);
  } else {
    for (std::size_t i = 0; i < seqs.size(); ++i)
      for (std::size_t j = i + 1; j < seqs.size(); ++j) one(i, j);
  }
  o.report["coefficient_horizon"] = n;
  if (seqs.size() == 2) o.report["multiplicity"] = pairs[0]["multiplicity"];
  o.report["pairs"] = pairs;
  o.table = t;
  return o;
}

Outcome cmd_verify_functoriality(const std::string& seq, std::size_t n) {
  BitSeq s = parse_bitseq(seq);
  CoeffTable table;
  auto r = verify_functoriality(s, n, table);
  Outcome o;
  o.pass = r.ok;
  o.report["seq"] = to_string(s);
  o.report["checked_below"] = r.checked_below;
  if (r.exponent) {
    o.report["witness"] = Json{{"exponent", *r.exponent}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
  }
  return o;
}

Outcome cmd_verify_bound(const std::string& seq, std::size_t n, const std::string& c, const std::string& r) {
  BitSeq s = parse_bitseq(seq);
  CoeffTable table;
  auto rep = verify_bound(s, n, table, parse_rational(c), parse_rational(r));
  Outcome o;
  o.pass = rep.ok;
  o.report["seq"] = to_string(s);
  o.report["C"] = c;
  o.report["R"] = r;
  o.report["checked_below"] = rep.checked_below;
  Json eq = Json::array();
  for (auto k : rep.equalities) eq.push_back(k);
  o.report["equalities"] = eq;
  if (rep.failure)
    o.report["witness"] = Json{{"n", *rep.failure}, {"coefficient", to_json(rep.coefficient)},
                               {"bound", to_json(rep.bound)}};
  return o;
}

Outcome cmd_verify_lemma(std::size_t n) {
  auto r = lemma_sweep(n);
  Outcome o;
  o.pass = r.ok;
  o.report["checked_up_to"] = r.checked_up_to;
  if (r.failure) {
    o.report["witness"] = Json{{"n", *r.failure}, {"lhs", to_json(lemma_lhs_closed(*r.failure))},
                               {"bound", to_json(Rational(20) / Rational((*r.failure + 1) * (*r.failure + 1)))}};
  }
  return o;
}

Outcome cmd_verify_shift_recursion(const std::string& a, const std::string& b, const std::string& horizon) {
  BitSeq s = parse_bitseq(a), t = parse_bitseq(b);
  Outcome o;
  o.pass = shift_recursion_check(s, t, parse_integer(horizon));
  o.report["a"] = to_string(s);
  o.report["b"] = to_string(t);
  o.report["horizon"] = horizon;
  o.report["multiplicity"] = to_json(mult_formula(s, t));
  return o;
}

Outcome cmd_arnold(const std::string& nu_text, std::size_t k) {
  GrowthSpec nu = GrowthSpec::parse(nu_text);
  auto pair = build_theoremA_pair(nu, k);
  Outcome o;
  o.report["nu"] = nu.name();
  o.report["s"] = to_string(pair.s);
  o.report["t"] = to_string(pair.t);
  Json ws = Json::array();
  Table t{{"n", "M", "nu", "mu_digits", "mu_gt_nu"}, {}};
  for (const auto& w : pair.witnesses) {
    // Recompute the multiplicity directly from the pair.
    MuTheoremA mu = mu_theoremA(pair.s, pair.t, w.n);
    bool greater = mu.M && *mu.M == w.M &&
                   (mu.value ? *mu.value > w.nu : mu.digits > Integer(decimal_digits(w.nu)));
    o.pass = o.pass && greater;
    Json j = to_json(w);
    j["mu_gt_nu"] = greater;
    if (mu.value) j["mu"] = to_json(*mu.value);
    ws.push_back(j);
    t.rows.push_back({w.n.str(), w.M.str(), w.nu.str(), w.mu_digits.str(), greater ? "true" : "false"});
  }
  o.report["witnesses"] = ws;
  o.report["horizon"] = to_json(pair.horizon);
  Json cert{{"all_finite", pair.certificate.all_finite}};
  cert["infinite_at"] = pair.certificate.infinite_at ? to_json(*pair.certificate.infinite_at) : Json(nullptr);
  o.report["finiteness_certificate"] = cert;
  o.pass = o.pass && pair.certificate.all_finite;
  o.table = t;
  return o;
}

std::vector<Integer> optional_list(const std::string& text) {
  return text.empty() ? std::vector<Integer>{} : parse_integer_list(text);
}

MuSequence run_mu(const MapGerm& f, const std::vector<BiPoly>& gens, const std::string& z,
                  const std::string& w, unsigned nmax) {
  GenericSampler sampler(g.seed);
  return mu_sequence(f, gens, optional_list(z), optional_list(w), nmax, sampler, g.budget);
}

Json mu_json(const MuSequence& m) {
  Json j;
  j["mu"] = to_json(m.mu);
  j["z"] = to_json(m.z);
  j["w"] = to_json(m.w);
  j["certified"] = m.certified;
  j["warning"] = m.warning;
  j["infinite_at"] = m.infinite_at ? Json(*m.infinite_at) : Json(nullptr);
  return j;
}

Outcome map_certificate_failure(const MapGerm& f) {
  auto cert = f.finiteness_certificate();
  Outcome o;
  o.pass = cert.ok;
  if (!cert.ok) {
    o.report["stage"] = "map validation";
    o.report["reason"] = cert.reason;
  }
  return o;
}

Outcome cmd_mu_seq(const std::string& map, const std::string& ideal, unsigned nmax, const std::string& z,
                   const std::string& w) {
  MapGerm f = parse_map(map);
  auto gens = parse_poly_list(ideal);
  Outcome o = map_certificate_failure(f);
  o.report["map"] = map;
  o.report["ideal"] = ideal;
  if (!o.pass) return o;
  auto m = run_mu(f, gens, z, w, nmax);
  Json mj = mu_json(m);
  for (auto& [k, v] : mj.items()) o.report[k] = v;
  o.pass = !m.infinite_at;
  Table t{{"n", "mu"}, {}};
  for (std::size_t n = 0; n < m.mu.size(); ++n) t.rows.push_back({std::to_string(n), m.mu[n].str()});
  if (m.infinite_at) t.rows.push_back({std::to_string(*m.infinite_at), "infinite"});
  o.table = t;
  return o;
}

bool all_monomial(const std::vector<BiPoly>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const BiPoly& p) { return p.term_count() == 1; });
}

Outcome cmd_samuel(const std::string& ideal, unsigned trials) {
  auto gens = parse_poly_list(ideal);
  GenericSampler sampler(g.seed);
  Outcome o;
  if (!all_monomial(gens)) {
    o.report["ideal"] = ideal;
    o.report["monomial"] = false;
    o.report["e"] = to_json(samuel_via_generic(gens, sampler, trials));
    return o;
  }
  MonomialIdeal2 I = parse_monomial_ideal(ideal);
  Staircase st = staircase(I);
  Integer area = samuel_area(I);
  o.report["ideal"] = ideal_json(I);
  o.report["monomial"] = true;
  Json hull = Json::array();
  for (const auto& v : st.hull) hull.push_back(Json::array({v.i, v.j}));
  o.report["newton_polygon"] = hull;
  o.report["covolume"] = to_json(st.covolume);
  o.report["colength"] = to_json(st.colength);
  o.report["containment_index"] = containment_index(I);
  o.report["e_area"] = to_json(area);
  std::vector<BiPoly> polys;
  for (const auto& e : I.generators()) polys.push_back(BiPoly::monomial(e.i, e.j));
  Integer generic = samuel_via_generic(polys, sampler, trials);
  o.report["e_generic"] = to_json(generic);
  Integer e = samuel(I);  // includes the Hilbert-Samuel cross-check
  o.report["e_hilbert_samuel"] = to_json(e);
  o.report["e"] = to_json(e);
  o.pass = generic == area && e == area;
  return o;
}

Outcome cmd_mixed(const std::string& a, const std::string& b) {
  MonomialIdeal2 I = parse_monomial_ideal(a), J = parse_monomial_ideal(b);
  Outcome o;
  Integer ea = samuel(I), eb = samuel(J), eab = samuel(product(I, J));
  Integer m = mixed(I, J);
  bool mink = minkowski_check(I, J);
  o.report["ideal_a"] = ideal_json(I);
  o.report["ideal_b"] = ideal_json(J);
  o.report["e_a"] = to_json(ea);
  o.report["e_b"] = to_json(eb);
  o.report["e_ab"] = to_json(eab);
  o.report["e_mixed"] = to_json(m);
  o.report["minkowski_ok"] = mink;
  o.pass = mink;
  return o;
}

MonomialValuation parse_valuation(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("valuation needs weights 's,t'", 0);
  return MonomialValuation::normalized(parse_rational(text.substr(0, comma)),
                                       parse_rational(text.substr(comma + 1)));
}

Outcome cmd_c_seq(const std::string& map, const std::string& nu_text, unsigned nmax) {
  MapGerm f = parse_map(map);
  MonomialValuation nu = parse_valuation(nu_text);
  Outcome o;
  o.report["map"] = map;
  o.report["valuation"] = Json::array({to_json(nu.s()), to_json(nu.t())});
  auto c = c_sequence(f, nu, nmax, g.budget);
  o.report["c"] = to_json(c);
  Table t{{"n", "c"}, {}};
  for (std::size_t n = 0; n < c.size(); ++n) t.rows.push_back({std::to_string(n + 1), to_string(c[n])});
  o.table = t;
  return o;
}

std::string approx(const Rational& q) {
  std::ostringstream ss;
  ss.precision(12);
  ss << q.convert_to<double>();
  return ss.str();
}

Json c_inf_json(const CInfinity& c) {
  Json j;
  j["sequence"] = to_json(c.sequence);
  j["recursion"] = c.recursion ? to_json(*c.recursion) : Json(nullptr);
  j["value"] = c.value ? to_json(*c.value) : Json(nullptr);
  j["bracket"] = c.bracket ? to_json(*c.bracket) : Json(nullptr);
  if (c.bracket && !c.value) j["approximate_value"] = approx(c.bracket->hi);
  if (!c.recursion) {
    j["note"] = c.note;
    j["fallback"] = Json{{"value", to_json(c.fallback_value)}, {"root", c.fallback_root}};
  }
  return j;
}

Outcome cmd_c_inf(const std::string& map, unsigned nmax, std::size_t max_order, std::size_t holdout) {
  MapGerm f = parse_map(map);
  auto c = c_infinity(f, nmax, max_order, holdout, g.budget);
  Outcome o;
  o.report["map"] = map;
  Json cj = c_inf_json(c);
  for (auto& [k, v] : cj.items()) o.report[k] = v;
  o.pass = c.recursion.has_value();
  return o;
}

Outcome cmd_skewness(const std::string& chart_text, std::size_t i, std::size_t j) {
  ProximityChart chart = parse_chart(read_text(chart_text));
  ExceptionalLattice l = intersection_matrix(chart);
  Outcome o;
  o.report["points"] = chart.size();
  Json prox = Json::array();
  for (const auto& [a, b] : chart.pairs()) prox.push_back(Json::array({a, b}));
  o.report["proximate"] = prox;
  o.report["axis"] = std::string(1, chart.axis());
  o.report["intersection"] = to_json(l.intersection);
  o.report["leading_minors"] = to_json(l.minors);
  o.report["dual"] = to_json(l.dual);
  o.report["x_order"] = to_json(l.x_order);
  o.report["y_order"] = to_json(l.y_order);
  o.report["b"] = to_json(l.b);
  if (i > 0 && j > 0) {
    o.report["i"] = i;
    o.report["j"] = j;
    o.report["skewness"] = to_json(skewness(l, i, j));
  } else {
    Json m = Json::array();
    for (std::size_t a = 1; a <= chart.size(); ++a) {
      Json row = Json::array();
      for (std::size_t b = 1; b <= chart.size(); ++b) row.push_back(to_json(skewness(l, a, b)));
      m.push_back(row);
    }
    o.report["skewness"] = m;
  }
  return o;
}

Outcome cmd_recursion(const std::string& seq, std::size_t max_order, std::size_t holdout) {
  auto s = parse_integer_list(seq);
  if (max_order == 0) max_order = std::max<std::size_t>(1, std::min<std::size_t>(3, (s.size() - std::min(s.size(), holdout)) / 2));
  Outcome o;
  o.report["sequence"] = to_json(s);
  try {
    auto m = detect_recursion(s, max_order, holdout);
    o.report["recursion"] = to_json(m);
    o.report["integral"] = m.integral();
  } catch (const NoRecurrenceFound& e) {
    o.pass = false;
    o.report["recursion"] = nullptr;
    o.report["witness"] = Json{{"max_order", max_order}, {"holdout", holdout}, {"reason", e.what()}};
  }
  return o;
}

Outcome cmd_pipeline(const std::string& map, const std::string& ideal, unsigned nmax, std::size_t max_order) {
  stage = "map validation";
  MapGerm f = parse_map(map);
  auto gens = parse_poly_list(ideal);
  Outcome o = map_certificate_failure(f);
  o.report["map"] = map;
  o.report["ideal"] = ideal;
  o.report["seed"] = g.seed;
  if (!o.pass) return o;

  stage = "mu sequence";
  auto mu = run_mu(f, gens, "", "", nmax);
  o.report["mu_sequence"] = mu_json(mu);
  if (mu.infinite_at) {
    o.pass = false;
    o.report["stage"] = stage;
    return o;
  }

  stage = "recursion";
  std::size_t order = std::max<std::size_t>(1, std::min(max_order, (mu.mu.size() - 1) / 2));
  try {
    o.report["recursion"] = to_json(detect_recursion(mu.mu, order, 1));
  } catch (const NoRecurrenceFound& e) {
    o.report["recursion"] = nullptr;
    o.report["stage"] = stage;
    o.report["reason"] = e.what();
    o.pass = false;
    return o;
  }

  stage = "c_infinity";
  auto c = c_infinity(f, std::max(nmax, 3u), max_order, 1, g.budget);
  o.report["c_infinity"] = c_inf_json(c);

  stage = "theorem D";
  Json d;
  if (!c.value) {
    d["pass"] = false;
    d["reason"] = c.recursion ? "c_inf is irrational; ratio bounds not computed" : "no recursion for c(f^n)";
    o.pass = false;
  } else if (*c.value <= 1) {
    // c_inf = 1: mu has its recursion and nothing grows; the bounds are trivial.
    d["pass"] = true;
    d["trivial"] = true;
    d["reason"] = "c_inf = " + to_string(*c.value);
  } else {
    auto r = theoremD_check(mu.mu, *c.value, max_order);
    d["pass"] = r.pass;
    d["A1"] = to_json(r.a1);
    d["A2"] = to_json(r.a2);
    if (!r.pass) d["reason"] = r.failure;
    o.pass = r.pass;
  }
  o.report["theorem_d"] = d;
  stage.clear();
  return o;
}

// ---- rendering -------------------------------------------------------------

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render_text(const Json& j, std::ostream& os, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto& [k, v] : j.items()) {
    if (v.is_object()) {
      os << pad << k << ":\n";
      render_text(v, os, indent + 2);
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); })) {
      os << pad << k << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar_text(v[i]);
      os << "\n";
    } else if (v.is_array()) {
      os << pad << k << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          os << pad << "  -\n";
          render_text(e, os, indent + 4);
        } else {
          os << pad << "  - " << e.dump() << "\n";
        }
      }
    } else {
      os << pad << k << ": " << scalar_text(v) << "\n";
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::vector<std::string>>& rows) {
  if (j.is_object() || j.is_array()) {
    for (auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else {
    rows.push_back({prefix, scalar_text(j)});
  }
}

void emit(const Json& doc, const std::optional<Table>& table, std::ostream& os) {
  if (g.format == "json") {
    os << doc.dump(2) << "\n";
  } else if (g.format == "text") {
    render_text(doc, os, 0);
  } else {
    Table t;
    if (table) {
      t = *table;
    } else {
      t.header = {"key", "value"};
      flatten(doc, "", t.rows);
    }
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_field(t.header[i]);
    os << "\n";
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
      os << "\n";
    }
  }
}

void write_output(const Json& doc, const std::optional<Table>& table) {
  if (g.out.empty()) {
    emit(doc, table, std::cout);
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw ParseError("cannot open output file '" + g.out + "'", 0);
  emit(doc, table, f);
}

Json config_json(const CLI::App& app, const std::vector<const CLI::App*>& chain) {
  Json c;
  std::string cmd;
  for (const auto* sub : chain) cmd += (cmd.empty() ? "" : " ") + sub->get_name();
  c["command"] = cmd;
  auto add = [&](const CLI::App* a) {
    for (const CLI::Option* opt : a->get_options()) {
      if (opt->get_name() == "--help" || opt->get_name() == "-h") continue;
      std::string name = opt->get_name();
      name.erase(0, name.find_first_not_of('-'));
      if (opt->count() > 0) {
        auto r = opt->results();
        if (r.size() == 1) c[name] = r[0];
        else c[name] = r;
      } else {
        c[name] = opt->get_default_str();
      }
    }
  };
  add(&app);
  for (const auto* sub : chain) add(sub);
  return c;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BudgetExceeded*>(&e)) return 3;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const MalformedChart*>(&e) ||
      dynamic_cast<const PreconditionFailed*>(&e) || dynamic_cast<const NotPrimary*>(&e) ||
      dynamic_cast<const DegenerateInput*>(&e) || dynamic_cast<const ZeroPolynomial*>(&e))
    return 2;
  return 1;
}

std::string error_name(const std::exception& e) {
#define GERMDYN_ERROR_NAME(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  GERMDYN_ERROR_NAME(BudgetExceeded)
  GERMDYN_ERROR_NAME(ParseError)
  GERMDYN_ERROR_NAME(MalformedChart)
  GERMDYN_ERROR_NAME(PreconditionFailed)
  GERMDYN_ERROR_NAME(NotPrimary)
  GERMDYN_ERROR_NAME(DegenerateInput)
  GERMDYN_ERROR_NAME(ZeroPolynomial)
  GERMDYN_ERROR_NAME(GenericityFailure)
  GERMDYN_ERROR_NAME(NotStabilized)
  GERMDYN_ERROR_NAME(NonIntegralPolarization)
  GERMDYN_ERROR_NAME(NotNegativeDefinite)
  GERMDYN_ERROR_NAME(NoRecurrenceFound)
  GERMDYN_ERROR_NAME(UndeterminedDifference)
#undef GERMDYN_ERROR_NAME
  return "Error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments with plane curve families, intersection growth and valuative dynamics"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g.seed, "seed for generic coefficients")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "output file (default: stdout)");
  app.add_option("--budget", g.budget, "term budget for polynomial compositions")->capture_default_str();

  std::function<Outcome()> run;

  // curve
  auto* curve = app.add_subcommand("curve", "coefficients and intersection numbers of the curve family");
  curve->require_subcommand(1);
  std::string seq, a, b;
  std::size_t n = 6;
  auto* coeffs = curve->add_subcommand("coeffs", "coefficients a_0 .. a_(n-1)");
  coeffs->add_option("--seq", seq, "binary sequence literal")->required();
  coeffs->add_option("--n", n, "number of coefficients")->capture_default_str();
  coeffs->callback([&] { run = [&] { return cmd_curve_coeffs(seq, n); }; });

  std::vector<std::string> pool;
  std::size_t mult_n = 1024;
  auto* mult = curve->add_subcommand("mult", "C_s . C_t by formula and coefficientwise");
  mult->add_option("--a", a, "first sequence");
  mult->add_option("--b", b, "second sequence");
  mult->add_option("--pool", pool, "pool of sequences for a pairwise table");
  mult->add_option("--n", mult_n, "coefficients compared")->capture_default_str();
  mult->callback([&] {
    run = [&] {
      std::vector<std::string> p = pool;
      if (p.empty()) {
        if (a.empty() || b.empty()) throw ParseError("curve mult needs --a and --b, or --pool", 0);
        p = {a, b};
      }
      if (p.size() < 2) throw ParseError("a pool needs at least two sequences", 0);
      return cmd_curve_mult(p, mult_n);
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "exact identity and bound checks");
  verify->require_subcommand(1);
  std::size_t vn = 2000;
  std::string bound_c = "1/20", bound_r = "10", horizon = "10000";
  auto* func = verify->add_subcommand("functoriality", "g_s^2 = y^4 - g_(sigma s)(y^4)");
  func->add_option("--seq", seq)->required();
  func->add_option("--n", vn, "truncation order")->capture_default_str();
  func->callback([&] { run = [&] { return cmd_verify_functoriality(seq, vn); }; });
  auto* bnd = verify->add_subcommand("bound", "|a_n| <= C R^n / n^2");
  bnd->add_option("--seq", seq)->required();
  bnd->add_option("--n", vn, "coefficients checked")->capture_default_str();
  bnd->add_option("--c", bound_c)->capture_default_str();
  bnd->add_option("--r", bound_r)->capture_default_str();
  bnd->callback([&] { run = [&] { return cmd_verify_bound(seq, vn, bound_c, bound_r); }; });
  std::size_t lemma_n = 10000;
  auto* lem = verify->add_subcommand("lemma", "the convolution sum bound for 1 <= n <= N");
  lem->add_option("--n", lemma_n)->capture_default_str();
  lem->callback([&] { run = [&] { return cmd_verify_lemma(lemma_n); }; });
  auto* s3 = verify->add_subcommand("shift", "the shift recursion of C_s . C_t");
  s3->add_option("--a", a)->required();
  s3->add_option("--b", b)->required();
  s3->add_option("--horizon", horizon)->capture_default_str();
  s3->callback([&] { run = [&] { return cmd_verify_shift_recursion(a, b, horizon); }; });

  // arnold
  std::string nu_text = "pow:10";
  std::size_t witnesses = 3;
  auto* arnold = app.add_subcommand("arnold", "a pair with mu(n) > nu(n) at certified witnesses");
  arnold->add_option("--nu", nu_text, "growth function")->capture_default_str();
  arnold->add_option("--witnesses", witnesses)->capture_default_str();
  arnold->callback([&] { run = [&] { return cmd_arnold(nu_text, witnesses); }; });

  // mu-seq
  std::string map, ideal = "x,y", z, w;
  unsigned nmax = 5;
  auto* museq = app.add_subcommand("mu-seq", "mu(n) = i_0(f^n* D_z, D_w)");
  museq->add_option("--map", map, "map literal (P, Q)")->required();
  museq->add_option("--ideal", ideal, "ideal generators")->capture_default_str();
  museq->add_option("--nmax", nmax)->capture_default_str();
  museq->add_option("--z", z, "coefficients of D_z (default: drawn from the seed)");
  museq->add_option("--w", w, "coefficients of D_w (default: drawn from the seed)");
  museq->callback([&] { run = [&] { return cmd_mu_seq(map, ideal, nmax, z, w); }; });

  // samuel / mixed
  unsigned trials = 3;
  auto* sam = app.add_subcommand("samuel", "Samuel multiplicity of an m-primary ideal");
  sam->add_option("--ideal", ideal)->required();
  sam->add_option("--trials", trials, "generic intersection trials")->capture_default_str();
  sam->callback([&] { run = [&] { return cmd_samuel(ideal, trials); }; });
  std::string ideal_a, ideal_b;
  auto* mix = app.add_subcommand("mixed", "mixed multiplicity of two monomial ideals");
  mix->add_option("--ideal-a", ideal_a)->required();
  mix->add_option("--ideal-b", ideal_b)->required();
  mix->callback([&] { run = [&] { return cmd_mixed(ideal_a, ideal_b); }; });

  // valuative dynamics
  std::string nu_weights = "1,1";
  auto* cseq = app.add_subcommand("c-seq", "attraction rates c(f^n, nu)");
  cseq->add_option("--map", map)->required();
  cseq->add_option("--nu", nu_weights, "monomial valuation weights s,t")->capture_default_str();
  cseq->add_option("--nmax", nmax)->capture_default_str();
  cseq->callback([&] { run = [&] { return cmd_c_seq(map, nu_weights, nmax); }; });
  unsigned cinf_n = 6;
  std::size_t max_order = 3, holdout = 1;
  auto* cinf = app.add_subcommand("c-inf", "asymptotic attraction rate");
  cinf->add_option("--map", map)->required();
  cinf->add_option("--nmax", cinf_n)->capture_default_str();
  cinf->add_option("--max-order", max_order)->capture_default_str();
  cinf->add_option("--holdout", holdout)->capture_default_str();
  cinf->callback([&] { run = [&] { return cmd_c_inf(map, cinf_n, max_order, holdout); }; });
  std::string chart;
  std::size_t si = 0, sj = 0;
  auto* skew = app.add_subcommand("skewness", "intersection lattice and skewness of a proximity chart");
  skew->add_option("--chart", chart, "chart JSON or a file containing it")->required();
  skew->add_option("--i", si, "first divisor (1-based); omit for the full table");
  skew->add_option("--j", sj, "second divisor (1-based)");
  skew->callback([&] {
    run = [&] {
      if ((si == 0) != (sj == 0)) throw ParseError("give both --i and --j, or neither", 0);
      return cmd_skewness(chart, si, sj);
    };
  });
  std::string rec_seq;
  std::size_t rec_order = 0;
  auto* rec = app.add_subcommand("recursion", "minimal integral linear recursion");
  rec->add_option("--seq", rec_seq, "comma-separated integers")->required();
  rec->add_option("--max-order", rec_order, "largest order tried (default: min(3, fit))");
  rec->add_option("--holdout", holdout)->capture_default_str();
  rec->callback([&] { run = [&] { return cmd_recursion(rec_seq, rec_order, holdout); }; });

  auto* pipe = app.add_subcommand("pipeline", "mu sequence, recursion, c_inf and growth bounds");
  pipe->add_option("--map", map)->required();
  pipe->add_option("--ideal", ideal)->capture_default_str();
  pipe->add_option("--nmax", nmax)->capture_default_str();
  pipe->add_option("--max-order", max_order)->capture_default_str();
  pipe->callback([&] { run = [&] { return cmd_pipeline(map, ideal, nmax, max_order); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::vector<const CLI::App*> chain;
  for (const CLI::App* a_ = &app; !a_->get_subcommands().empty();) {
    a_ = a_->get_subcommands().front();
    chain.push_back(a_);
  }
  Json doc;
  doc["command"] = "";
  doc["status"] = "";
  doc["config"] = config_json(app, chain);
  doc["command"] = doc["config"]["command"];
  int code = 0;
  std::optional<Table> table;
  try {
    Outcome o = run();
    doc["status"] = o.pass ? "PASS" : "FAIL";
    for (auto& [k, v] : o.report.items()) doc[k] = v;
    table = o.table;
    code = o.pass ? 0 : 1;
  } catch (const std::exception& e) {
    code = exit_code_for(e);
    doc["status"] = code == 3 ? "BUDGET_EXCEEDED" : (code == 2 ? "USAGE_ERROR" : "FAIL");
    Json err{{"type", error_name(e)}, {"message", e.what()}};
    if (!stage.empty()) err["stage"] = stage;
    if (auto* be = dynamic_cast<const BudgetExceeded*>(&e)) err["completed"] = be->completed();
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) err["position"] = pe->position();
    doc["error"] = err;
    std::cerr << "error: " << e.what() << "\n";
  }
  try {
    write_output(doc, code == 0 || !doc.contains("error") ? table : std::nullopt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
