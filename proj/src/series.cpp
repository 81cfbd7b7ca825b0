#include "germdyn/series.hpp"

#include <gmp.h>

#include <cstdint>

namespace germdyn::detail {

namespace {

using Limb = std::uint64_t;

struct Scaled {
  std::vector<Integer> values;  // value[i] = coefficient[i] * 2^exp
  std::uint64_t exp = 0;
  std::size_t max_bits = 0;
};

Scaled scale_to_integers(const std::vector<Dyadic>& v) {
  Scaled s;
  for (const auto& d : v) s.exp = std::max(s.exp, d.exponent());
  s.values.reserve(v.size());
  for (const auto& d : v) {
    Integer x = d.numerator() << (s.exp - d.exponent());
    if (!x.is_zero()) s.max_bits = std::max<std::size_t>(s.max_bits, boost::multiprecision::msb(boost::multiprecision::abs(x)) + 1);
    s.values.push_back(std::move(x));
  }
  return s;
}

// Pack the positive (or negative, by magnitude) entries into slots of
// `slot_limbs` limbs each.
Integer pack(const std::vector<Integer>& values, std::size_t slot_limbs, bool negative) {
  std::vector<Limb> buffer(values.size() * slot_limbs, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Integer& v = values[i];
    if (v.is_zero() || (v.sign() < 0) != negative) continue;
    std::size_t count = 0;
    mpz_export(buffer.data() + i * slot_limbs, &count, -1, sizeof(Limb), 0, 0, v.backend().data());
  }
  Integer r;
  if (!buffer.empty()) mpz_import(r.backend().data(), buffer.size(), -1, sizeof(Limb), 0, 0, buffer.data());
  return r;
}

std::vector<Integer> unpack(const Integer& z, std::size_t slot_limbs, std::size_t n) {
  std::size_t total = (mpz_sizeinbase(z.backend().data(), 2) + 63) / 64;
  std::vector<Limb> buffer(std::max(total, n * slot_limbs), 0);
  if (!z.is_zero()) {
    std::size_t count = 0;
    mpz_export(buffer.data(), &count, -1, sizeof(Limb), 0, 0, z.backend().data());
  }
  std::vector<Integer> out(n);
  for (std::size_t k = 0; k < n; ++k)
    mpz_import(out[k].backend().data(), slot_limbs, -1, sizeof(Limb), 0, 0,
               buffer.data() + k * slot_limbs);
  return out;
}

}  // namespace

std::vector<Dyadic> convolve_kronecker(const std::vector<Dyadic>& a, const std::vector<Dyadic>& b,
                                       std::size_t n) {
  std::vector<Dyadic> result(n);
  if (a.empty() || b.empty() || n == 0) return result;
  std::vector<Dyadic> a_cut(a.begin(), a.begin() + std::min(a.size(), n));
  std::vector<Dyadic> b_cut(b.begin(), b.begin() + std::min(b.size(), n));
  Scaled sa = scale_to_integers(a_cut);
  Scaled sb = scale_to_integers(b_cut);
  if (sa.max_bits == 0 || sb.max_bits == 0) return result;

  // Each slot holds a sum of at most min(len) products of nonnegative parts.
  std::size_t terms = std::min(a_cut.size(), b_cut.size());
  std::size_t bits = sa.max_bits + sb.max_bits + 64 - __builtin_clzll(terms) + 1;
  std::size_t slot_limbs = (bits + 63) / 64;

  Integer pa = pack(sa.values, slot_limbs, false), na = pack(sa.values, slot_limbs, true);
  Integer pb = pack(sb.values, slot_limbs, false), nb = pack(sb.values, slot_limbs, true);
  std::size_t slots = a_cut.size() + b_cut.size() - 1;
  auto plus1 = unpack(pa * pb, slot_limbs, slots);
  auto plus2 = unpack(na * nb, slot_limbs, slots);
  auto minus1 = unpack(pa * nb, slot_limbs, slots);
  auto minus2 = unpack(na * pb, slot_limbs, slots);

  const std::uint64_t exp = sa.exp + sb.exp;
  for (std::size_t k = 0; k < n && k < slots; ++k) {
    Integer c = plus1[k] + plus2[k] - minus1[k] - minus2[k];
    result[k] = Dyadic(std::move(c), exp);
  }
  return result;
}

}  // namespace germdyn::detail
