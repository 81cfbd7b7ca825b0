#include "germdyn/cantor.hpp"

#include "germdyn/errors.hpp"

#include <gmp.h>
#include <mpfr.h>

namespace germdyn {

std::vector<Integer>& CoeffTable::extend(const BitSeq& s, std::size_t count) {
  // Shifts sigma^j(s) needed, with the number of entries each must hold.
  std::vector<std::pair<std::string, std::size_t>> need;
  std::vector<bool> lead_bit;
  BitSeq cur = s;
  std::size_t cnt = std::max<std::size_t>(count, 1);
  while (true) {
    need.emplace_back(cur.key(), cnt);
    lead_bit.push_back(cur[0]);
    if (cnt <= 1) break;
    cnt = (cnt - 2) / 4 + 1;
    cur = cur.shift();
  }

  Integer tmp;
  for (std::size_t idx = need.size(); idx-- > 0;) {
    auto& row = rows_[need[idx].first];
    const std::size_t target = need[idx].second;
    if (row.size() >= target) continue;
    if (row.empty()) row.emplace_back(lead_bit[idx] ? -1 : 1);
    const bool a0_positive = row[0] > 0;
    const std::vector<Integer>* sigma = nullptr;
    if (target > 1) sigma = &rows_.at(need[idx + 1].first);
    row.reserve(target);
    for (std::size_t m = row.size(); m < target; ++m) {
      Integer acc = 0;
      mpz_ptr a = acc.backend().data();
      for (std::size_t i = 1; i < m - i; ++i)
        mpz_addmul(a, row[i].backend().data(), row[m - i].backend().data());
      mpz_mul_2exp(a, a, 1);
      if (m % 2 == 0) mpz_addmul(a, row[m / 2].backend().data(), row[m / 2].backend().data());
      if ((m - 1) % 4 == 0) {
        const std::size_t k = (m - 1) / 4;
        if (k == 0) {
          acc += (*sigma)[0];
        } else {
          mpz_mul_2exp(tmp.backend().data(), (*sigma)[k].backend().data(), 6 * k + 1);
          acc += tmp;
        }
      }
      if (a0_positive) acc = -acc;
      row.push_back(std::move(acc));
    }
  }
  return rows_.at(need[0].first);
}

const std::vector<Integer>& CoeffTable::scaled_row(const BitSeq& s, std::size_t count) {
  return extend(s, count);
}

Dyadic unscale(const Integer& scaled, std::size_t n) {
  return n == 0 ? Dyadic(scaled, 0) : Dyadic(scaled, 2 * n - 1);
}

Dyadic CoeffTable::coeff(const BitSeq& s, std::size_t n) {
  return unscale(extend(s, n + 1)[n], n);
}

std::vector<Dyadic> CoeffTable::row(const BitSeq& s, std::size_t count) {
  const auto& r = extend(s, count);
  std::vector<Dyadic> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(unscale(r[n], n));
  return out;
}

Dyadic coeff(const BitSeq& s, std::size_t n) {
  thread_local CoeffTable table;
  return table.coeff(s, n);
}

USeries<Dyadic> curve(const BitSeq& s, std::size_t N, CoeffTable& table) {
  USeries<Dyadic> g(N);
  if (N <= 2) return g;
  const std::size_t count = (N - 3) / 4 + 1;
  const auto& r = table.scaled_row(s, count);
  for (std::size_t n = 0; n < count; ++n) g[2 + 4 * n] = unscale(r[n], n);
  return g;
}

FunctorialityReport verify_functoriality(const USeries<Dyadic>& g, const USeries<Dyadic>& g_sigma,
                                         std::size_t N) {
  if (N < 8) throw PreconditionFailed("verify_functoriality needs N >= 8");
  if (g.trunc() < N || 4 * g_sigma.trunc() < N)
    throw PreconditionFailed("verify_functoriality: series truncated below N");
  std::vector<Dyadic> cut(g.coefficients().begin(), g.coefficients().begin() + static_cast<std::ptrdiff_t>(N));
  USeries<Dyadic> gg(std::move(cut));
  USeries<Dyadic> lhs = gg * gg;
  USeries<Dyadic> sub = compose_monomial(g_sigma, 4);

  FunctorialityReport rep;
  rep.checked_below = N;
  for (std::size_t k = 0; k < N; ++k) {
    Dyadic l = k < lhs.trunc() ? lhs[k] : Dyadic();
    Dyadic r = Dyadic(k == 4 ? 1 : 0) - sub[k];
    if (l != r) {
      rep.ok = false;
      rep.exponent = k;
      rep.lhs = l;
      rep.rhs = r;
      break;
    }
  }
  return rep;
}

FunctorialityReport verify_functoriality(const BitSeq& s, std::size_t N, CoeffTable& table) {
  if (N < 8) throw PreconditionFailed("verify_functoriality needs N >= 8");
  USeries<Dyadic> g = curve(s, N, table);
  USeries<Dyadic> gs = curve(s.shift(), (N + 3) / 4, table);
  return verify_functoriality(g, gs, N);
}

BoundReport verify_bound(const BitSeq& s, std::size_t N, CoeffTable& table, const Rational& C,
                         const Rational& R) {
  if (N < 1) throw PreconditionFailed("verify_bound needs N >= 1");
  if (C < 0 || R < 0) throw PreconditionFailed("verify_bound needs C, R >= 0");
  BoundReport rep;
  rep.checked_below = N;
  if (N == 1) return rep;
  const auto& row = table.scaled_row(s, N);
  Rational crn = C;
  for (std::size_t n = 1; n < N; ++n) {
    crn *= R;
    // |A_n| / 2^(2n-1) <= num / (den n^2)  <=>  |A_n| den n^2 <= num 2^(2n-1)
    Integer nn = Integer(n) * n;
    Integer lhs = boost::multiprecision::abs(row[n]) * denominator(crn) * nn;
    Integer rhs = numerator(crn) << (2 * n - 1);
    if (lhs == rhs) rep.equalities.push_back(n);
    if (lhs > rhs) {
      rep.ok = false;
      rep.failure = n;
      rep.coefficient = unscale(row[n], n);
      rep.bound = crn / Rational(nn);
      break;
    }
  }
  return rep;
}

Rational lemma_lhs_direct(std::size_t n) {
  Rational sum = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer a = Integer(k) * k, b = Integer(n - k + 1) * (n - k + 1);
    sum += Rational(Integer(1), a * b);
  }
  return sum;
}

Rational lemma_lhs_closed(std::size_t n) {
  Rational h = 0, h2 = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    h += Rational(Integer(1), Integer(k));
    h2 += Rational(Integer(1), Integer(k) * k);
  }
  Integer n1 = n + 1;
  return (2 * h2 + 4 * h / Rational(n1)) / Rational(n1 * n1);
}

bool lemma_sum_check(std::size_t n) {
  if (n < 1) throw PreconditionFailed("lemma_sum_check needs n >= 1");
  Integer n1 = n + 1;
  return lemma_lhs_direct(n) <= Rational(Integer(20), n1 * n1);
}

LemmaSweep lemma_sweep(std::size_t n_max) {
  LemmaSweep rep;
  Rational h = 0, h2 = 0;
  const Rational twenty = 20;
  for (std::size_t n = 1; n <= n_max; ++n) {
    h += Rational(Integer(1), Integer(n));
    h2 += Rational(Integer(1), Integer(n) * n);
    // (n+1)^2 * lhs = 2 H2_n + 4 H_n / (n+1)
    if (2 * h2 + 4 * h / Rational(Integer(n + 1)) > twenty) {
      rep.ok = false;
      rep.failure = n;
      rep.checked_up_to = n;
      return rep;
    }
  }
  rep.checked_up_to = n_max;
  return rep;
}

Integer mult_from_index(const Integer& m, std::uint64_t max_bits) {
  if (m < 0) throw PreconditionFailed("negative index");
  if (m + 1 > max_bits / 2) throw BudgetExceeded("4^(m+1) with m = " + m.str() + " exceeds the bit budget");
  std::uint64_t e = 2 * (static_cast<std::uint64_t>(m) + 1);
  return (pow2(e) + 2) / 3;
}

Multiplicity mult_formula(const BitSeq& s, const BitSeq& t, const std::optional<Integer>& horizon) {
  if (s == t) return Multiplicity::infinite();
  auto m = first_difference(s, t, horizon);
  if (m) return Multiplicity::exact(mult_from_index(*m));
  return Multiplicity::at_least(mult_from_index(*horizon));
}

Multiplicity mult_coeffwise(const BitSeq& s, const BitSeq& t, std::size_t N, CoeffTable& table) {
  if (N < 1) throw PreconditionFailed("mult_coeffwise needs N >= 1");
  table.scaled_row(s, N);
  table.scaled_row(t, N);
  // Fetch again: extending one row can reallocate the other.
  const auto& rs = table.scaled_row(s, N);
  const auto& rt = table.scaled_row(t, N);
  for (std::size_t n = 0; n < N; ++n)
    if (rs[n] != rt[n]) return Multiplicity::exact(Integer(2 + 4 * n));
  return Multiplicity::at_least(Integer(2) + 4 * Integer(N));
}

bool shift_recursion_check(const BitSeq& s, const BitSeq& t, const Integer& horizon) {
  if (!first_difference(s, t, horizon))
    throw UndeterminedDifference("sequences agree below the horizon " + horizon.str());
  Multiplicity v = mult_formula(s, t, horizon);
  if (s[0] != t[0]) return v == Multiplicity::exact(2);
  Multiplicity w = mult_formula(s.shift(), t.shift(), horizon);
  if (!w.is_exact()) return false;
  return v == Multiplicity::exact(4 * w.value() - 2);
}

Integer mu_digits(const Integer& M) {
  if (M < 0) throw PreconditionFailed("negative index");
  if (M <= kExactMuIndexLimit) return Integer(decimal_digits(mult_from_index(M)));

  // digits = floor((M+1) log10 4 - log10 3) + 1: no power of ten lies in
  // (4^(M+1)/3, (4^(M+1)+2)/3], and the logarithm is never an integer.
  Integer m1 = M + 1;
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(mpz_sizeinbase(m1.backend().data(), 2)) + 64;
  while (true) {
    mpfr_t four, three, lo4, hi4, lo3, hi3, mm, lo, hi;
    mpfr_inits2(prec, four, three, lo4, hi4, lo3, hi3, mm, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(four, 4, MPFR_RNDN);
    mpfr_set_ui(three, 3, MPFR_RNDN);
    mpfr_log10(lo4, four, MPFR_RNDD);
    mpfr_log10(hi4, four, MPFR_RNDU);
    mpfr_log10(lo3, three, MPFR_RNDD);
    mpfr_log10(hi3, three, MPFR_RNDU);
    mpfr_set_z(mm, m1.backend().data(), MPFR_RNDN);  // exact: prec exceeds the bit length
    mpfr_mul(lo, mm, lo4, MPFR_RNDD);
    mpfr_sub(lo, lo, hi3, MPFR_RNDD);
    mpfr_mul(hi, mm, hi4, MPFR_RNDU);
    mpfr_sub(hi, hi, lo3, MPFR_RNDU);
    Integer flo, fhi;
    mpfr_get_z(flo.backend().data(), lo, MPFR_RNDD);
    mpfr_get_z(fhi.backend().data(), hi, MPFR_RNDD);
    mpfr_clears(four, three, lo4, hi4, lo3, hi3, mm, lo, hi, static_cast<mpfr_ptr>(nullptr));
    if (flo == fhi) return flo + 1;
    prec *= 2;
  }
}

MuTheoremA mu_theoremA(const BitSeq& s, const BitSeq& t, const Integer& n) {
  MuTheoremA r;
  auto m = first_difference(s, t.shift(n));
  if (!m) return r;
  r.M = *m;
  r.digits = mu_digits(*m);
  if (*m <= kExactMuIndexLimit) r.value = mult_from_index(*m);
  return r;
}

FinitenessCertificate finiteness_certificate(const BitSeq& s, const BitSeq& t) {
  FinitenessCertificate c;
  c.infinite_at = shift_to(t, s);
  c.all_finite = !c.infinite_at;
  return c;
}

TheoremAPair build_theoremA_pair(const GrowthSpec& nu, std::size_t K) {
  if (K < 1) throw PreconditionFailed("build_theoremA_pair needs K >= 1");
  TheoremAPair pair;
  std::vector<Integer> lengths;
  Integer n = 0;
  for (std::size_t k = 0; k < K; ++k) {
    Witness w;
    w.n = n;
    w.nu = nu(n);
    w.M = w.nu + 1;
    lengths.push_back(w.M);
    pair.witnesses.push_back(std::move(w));
    n += lengths.back() + 1;
  }
  pair.s = BitSeq::zeros();
  pair.t = BitSeq::blocks({}, lengths);
  for (auto& w : pair.witnesses) {
    auto m = first_difference(pair.s, pair.t.shift(w.n));
    if (!m || *m != w.M) throw Error("witness construction failed its self-check at n = " + w.n.str());
    w.mu_digits = mu_digits(w.M);
  }
  pair.horizon = pair.witnesses.back().n;
  pair.certificate = finiteness_certificate(pair.s, pair.t);
  return pair;
}

}  // namespace germdyn
