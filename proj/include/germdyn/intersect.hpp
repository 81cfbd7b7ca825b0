#pragma once

// Local intersection multiplicity at the origin of exact plane curves, by
// resultants, and the pullback machinery for mu(n) = i_0(f^(n*) D_z, D_w).

#include "germdyn/bipoly.hpp"
#include "germdyn/bounds.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace germdyn {

/// A polynomial curve through the origin.
class PlaneCurve {
 public:
  /// Throws DegenerateInput unless f is nonzero with f(0, 0) = 0.
  explicit PlaneCurve(BiPoly f, bool reduce = false);
  const BiPoly& equation() const noexcept { return f_; }
  bool reduced() const noexcept { return reduced_; }

 private:
  BiPoly f_;
  bool reduced_ = false;
};

/// A polynomial map germ (F1, F2) fixing the origin.
class MapGerm {
 public:
  /// Throws DegenerateInput unless F(0) = 0.
  MapGerm(BiPoly f1, BiPoly f2);
  static MapGerm identity() { return MapGerm(BiPoly::x(), BiPoly::y()); }

  const BiPoly& first() const noexcept { return f1_; }
  const BiPoly& second() const noexcept { return f2_; }

  struct Certificate {
    bool ok = false;
    std::string reason;
  };
  /// Sufficient test for finite-to-one near 0: coprime components with a
  /// resultant in x that is not identically zero.
  Certificate finiteness_certificate() const;

  /// Components of this map composed with itself n times.
  std::pair<BiPoly, BiPoly> iterate(unsigned n, std::size_t term_budget = kDefaultTermBudget) const;

 private:
  BiPoly f1_, f2_;
};

/// Seeded source of generic integer coefficients in [-bound, bound] \ {0}.
class GenericSampler {
 public:
  explicit GenericSampler(std::uint64_t seed, std::int64_t bound = 10000);
  std::uint64_t seed() const noexcept { return seed_; }
  std::int64_t bound() const noexcept { return bound_; }
  Integer draw();
  std::vector<Integer> draw(std::size_t k);

 private:
  std::uint64_t seed_;
  std::int64_t bound_;
  std::mt19937_64 rng_;
};

struct LocalMult {
  Multiplicity value = Multiplicity::exact(0);
  /// The coordinates used were proven to localize the resultant at 0.
  bool certified = false;
  /// Trials disagreed; value is the minimum seen.
  bool warning = false;
  /// Random coordinate changes drawn.
  unsigned draws = 0;
};

/// i_0(P, Q). Coordinates are certified when both polynomials have constant
/// leading coefficients in x and P(x,0), Q(x,0) share no root other than 0;
/// then i_0 = ord_y Res_x(P, Q). Otherwise random unimodular changes
/// x -> (1+ab)x + ay, y -> bx + y are drawn until one certifies, falling
/// back to agreement of two trials (at most 5 draws).
LocalMult local_mult(const BiPoly& p, const BiPoly& q, GenericSampler& sampler);
inline LocalMult local_mult(const PlaneCurve& p, const PlaneCurve& q, GenericSampler& sampler) {
  return local_mult(p.equation(), q.equation(), sampler);
}

/// F^* C = C o F.
PlaneCurve pullback(const MapGerm& f, const PlaneCurve& c,
                    std::size_t term_budget = kDefaultTermBudget);

/// sum_i z_i g_i.
BiPoly generic_member(const std::vector<BiPoly>& generators, const std::vector<Integer>& z);

struct MuSequence {
  std::vector<Integer> mu;              // mu(0), mu(1), ...
  std::optional<std::size_t> infinite_at;  // index where the curves share a component
  std::vector<Integer> z, w;
  bool certified = true;
  bool warning = false;
};

/// mu(n) = i_0(f^(n*) D_z, D_w) for n = 0..n_max, D_z = sum z_i g_i.
/// Empty z or w are drawn from the sampler. Stops at an infinite value.
MuSequence mu_sequence(const MapGerm& f, const std::vector<BiPoly>& generators,
                       std::vector<Integer> z, std::vector<Integer> w, unsigned n_max,
                       GenericSampler& sampler, std::size_t term_budget = kDefaultTermBudget);

/// Common value of i_0 over independent generic pairs of members of the
/// ideal; GenericityFailure when trials disagree.
Integer samuel_via_generic(const std::vector<BiPoly>& generators, GenericSampler& sampler,
                           unsigned trials = 3);

}  // namespace germdyn
