#pragma once

// The curve family C_s = { x + g_s(y) = 0 }, g_s(y) = sum_n a_n^s y^(2+4n),
// indexed by infinite binary sequences s, together with exact checks of its
// identities, coefficient bounds and the intersection numbers C_s . C_t.

#include "germdyn/arith.hpp"
#include "germdyn/bitseq.hpp"
#include "germdyn/bounds.hpp"
#include "germdyn/growth.hpp"
#include "germdyn/series.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace germdyn {

/// Memoized coefficient rows a_n^s, one row per distinct (canonical) shift of s.
///
/// Rows are stored scaled: entry 0 is a_0 = +-1 and entry m >= 1 is the
/// integer A_m = a_m * 2^(2m-1). In these units the recursion needs no
/// division at all:
///   A_m = -a_0 * ( sum_{i=1}^{m-1} A_i A_{m-i} + [4 | m-1] * T ),
///   T = a_0^sigma for m = 1, T = A^sigma_k * 2^(6k+1) for m = 4k+1.
/// Rows are built bottom-up, never by call recursion. Not thread-safe: use
/// one table per worker.
class CoeffTable {
 public:
  /// At least `count` scaled entries of the row of s.
  const std::vector<Integer>& scaled_row(const BitSeq& s, std::size_t count);
  Dyadic coeff(const BitSeq& s, std::size_t n);
  /// a_0 .. a_(count-1).
  std::vector<Dyadic> row(const BitSeq& s, std::size_t count);

  std::size_t cached_rows() const noexcept { return rows_.size(); }
  void clear() { rows_.clear(); }

 private:
  std::vector<Integer>& extend(const BitSeq& s, std::size_t count);
  std::unordered_map<std::string, std::vector<Integer>> rows_;
};

/// A scaled entry back to a_n.
Dyadic unscale(const Integer& scaled, std::size_t n);

/// a_n^s through a per-thread table.
Dyadic coeff(const BitSeq& s, std::size_t n);

/// g_s truncated to order N (exponents < N).
USeries<Dyadic> curve(const BitSeq& s, std::size_t N, CoeffTable& table);

struct FunctorialityReport {
  bool ok = true;
  std::size_t checked_below = 0;
  /// First exponent where g_s^2 and y^4 - g_sigma(s)(y^4) disagree.
  std::optional<std::size_t> exponent;
  Dyadic lhs, rhs;
};

/// g_s(y)^2 = y^4 - g_sigma(s)(y^4) for all exponents < N.
FunctorialityReport verify_functoriality(const BitSeq& s, std::size_t N, CoeffTable& table);
/// Same identity for explicitly given series (g needs trunc >= N, g_sigma
/// trunc >= ceil(N / 4)).
FunctorialityReport verify_functoriality(const USeries<Dyadic>& g, const USeries<Dyadic>& g_sigma,
                                         std::size_t N);

struct BoundReport {
  bool ok = true;
  std::size_t checked_below = 0;
  std::optional<std::size_t> failure;  // first n with |a_n| > C R^n / n^2
  Dyadic coefficient;                  // a_n at the failure
  Rational bound;                      // C R^n / n^2 at the failure
  std::vector<std::size_t> equalities; // n with |a_n| = C R^n / n^2
};

/// |a_n^s| <= C R^n / n^2 for 1 <= n < N, decided exactly.
BoundReport verify_bound(const BitSeq& s, std::size_t N, CoeffTable& table,
                         const Rational& C = Rational(1, 20), const Rational& R = Rational(10));

/// sum_{k=1}^n 1/(k^2 (n-k+1)^2), by direct summation.
Rational lemma_lhs_direct(std::size_t n);
/// The same sum in closed form (2 H2_n + 4 H_n/(n+1)) / (n+1)^2.
Rational lemma_lhs_closed(std::size_t n);
/// The sum is <= 20/(n+1)^2.
bool lemma_sum_check(std::size_t n);

struct LemmaSweep {
  bool ok = true;
  std::size_t checked_up_to = 0;
  std::optional<std::size_t> failure;
};
/// lemma_sum_check for every 1 <= n <= n_max, with incremental harmonic sums.
LemmaSweep lemma_sweep(std::size_t n_max);

/// (4^(m+1) + 2) / 3.
Integer mult_from_index(const Integer& m, std::uint64_t max_bits = GrowthSpec::kDefaultMaxBits);

/// C_s . C_t from the first differing bit. Equal sequences give infinite;
/// no difference below the horizon gives at_least((4^(h+1)+2)/3).
Multiplicity mult_formula(const BitSeq& s, const BitSeq& t,
                          const std::optional<Integer>& horizon = std::nullopt);

/// 2 + 4n for the first differing coefficient index n < N, else
/// at_least(2 + 4N).
Multiplicity mult_coeffwise(const BitSeq& s, const BitSeq& t, std::size_t N, CoeffTable& table);

/// C_s.C_t = 2 when s_0 != t_0, else 4 (C_sigma(s) . C_sigma(t)) - 2.
/// Throws UndeterminedDifference when s, t agree below the horizon.
bool shift_recursion_check(const BitSeq& s, const BitSeq& t, const Integer& horizon);

/// Number of decimal digits of (4^(M+1) + 2) / 3, exact even for enormous M.
Integer mu_digits(const Integer& M);

struct MuTheoremA {
  /// M(s, sigma^n t); nullopt when sigma^n t == s.
  std::optional<Integer> M;
  /// The multiplicity itself when it is small enough to write down.
  std::optional<Integer> value;
  Integer digits;
};

inline constexpr std::uint64_t kExactMuIndexLimit = 200000;

/// C_s . C_(sigma^n t).
MuTheoremA mu_theoremA(const BitSeq& s, const BitSeq& t, const Integer& n);

struct FinitenessCertificate {
  bool all_finite = false;
  /// A shift n with sigma^n t == s, when one exists.
  std::optional<Integer> infinite_at;
};
/// Decides whether M(s, sigma^n t) is finite for every n >= 0.
FinitenessCertificate finiteness_certificate(const BitSeq& s, const BitSeq& t);

struct Witness {
  Integer n, M, nu, mu_digits;
};

struct TheoremAPair {
  BitSeq s, t;
  std::vector<Witness> witnesses;
  FinitenessCertificate certificate;
  Integer horizon;  // last witness index
};

/// s = 0^infinity, t = 0^L1 1 0^L2 1 ... 0^LK 1 (01)^infinity with block
/// starts n_1 = 0, n_(k+1) = n_k + L_k + 1 and L_k = nu(n_k) + 1.
TheoremAPair build_theoremA_pair(const GrowthSpec& nu, std::size_t K);

}  // namespace germdyn
