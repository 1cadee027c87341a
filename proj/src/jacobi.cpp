#include "applf/jacobi.hpp"

#include <numeric>
#include <stdexcept>

namespace applf {

CycValue jacobi_sum(const Character& a, const Character& b) {
  check_same_field(a, b);
  const PrimeField& f = a.field();
  const i64 p = f.p();
  const i64 n = p - 1;
  const i64 level = std::lcm(a.order(), b.order());
  const i64 sa = a.exponent() / (n / level) % level;
  const i64 sb = b.exponent() / (n / level) % level;

  std::vector<i64> counts(level, 0);
  for (i64 x = 2; x < p; ++x)  // x = 0 and x = 1 contribute 0
    counts[(sa * f.dlog(x) + sb * f.dlog(p + 1 - x)) % level]++;
  CycValue v = CycValue::from_power_counts(level, counts);
  if (v.is_zero())
    throw std::logic_error("jacobi_sum vanished; Z[zeta] denominator invariant broken");
  return v;
}

CycValue ff_binom(const Character& a, const Character& chi) {
  check_same_field(a, chi);
  return jacobi_sum(a, chi.conj()) * static_cast<i64>(-chi.at_minus_one());
}

}  // namespace applf
