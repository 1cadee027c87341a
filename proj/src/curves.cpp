#include "applf/curves.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "applf/appell.hpp"
#include "applf/errors.hpp"

namespace applf {

void CurveSpec::validate() const {
  if (N < 1 || i < 1 || j < 1 || ks.empty())
    fail(ErrorCode::PreconditionViolated, "curve exponents must be positive");
  i64 g = std::gcd(N, std::gcd(i, j));
  i64 sum = i + j;
  for (i64 k : ks) {
    if (k < 1)
      fail(ErrorCode::PreconditionViolated, "curve exponents must be positive");
    g = std::gcd(g, k);
    sum += k;
  }
  if (g != 1)
    fail(ErrorCode::PreconditionViolated,
         "gcd(N, i, j, k_1..k_n) must be 1, got " + std::to_string(g));
  if (sum % N == 0)
    fail(ErrorCode::PreconditionViolated,
         "N must not divide i + j + sum(k)");
}

i64 euler_characteristic_xn(i64 n_cover, std::span<const i64> as) {
  if (n_cover < 1 || as.empty())
    fail(ErrorCode::PreconditionViolated, "need N >= 1 and at least one exponent");
  i64 g = n_cover, sum = 0;
  for (i64 a : as) {
    if (a < 1)
      fail(ErrorCode::PreconditionViolated, "branch exponents must be positive");
    g = std::gcd(g, a);
    sum += a;
  }
  if (g != 1)
    fail(ErrorCode::PreconditionViolated, "gcd(N, A_0..A_r) must be 1");
  if (sum == n_cover)
    fail(ErrorCode::PreconditionViolated, "N must differ from sum of exponents");
  const i64 r = static_cast<i64>(as.size()) - 1;
  i64 chi = -r * n_cover + std::gcd(n_cover, std::abs(n_cover - sum));
  for (i64 a : as) chi += std::gcd(n_cover, a);
  return chi;
}

i64 genus_xn(i64 n_cover, std::span<const i64> as) {
  const i64 chi = euler_characteristic_xn(n_cover, as);
  if ((2 - chi) % 2 != 0) throw std::logic_error("odd Euler characteristic");
  return (2 - chi) / 2;
}

i64 genus_picard(const CurveSpec& spec) {
  spec.validate();
  i64 sum = spec.i + spec.j;
  for (i64 k : spec.ks) sum += k;
  i64 val = (spec.n() + 1) * spec.N - std::gcd(spec.N, sum) -
            std::gcd(spec.N, spec.i) - std::gcd(spec.N, spec.j);
  for (i64 k : spec.ks) val -= std::gcd(spec.N, k);
  if (val % 2 != 0) throw std::logic_error("odd genus numerator");
  return 1 + val / 2;
}

i64 nth_power_count(const PrimeField& f, i64 a, i64 n) {
  a = f.reduce(a);
  if (a == 0) fail(ErrorCode::DomainError, "nth_power_count requires a != 0");
  if (n < 1 || (f.p() - 1) % n != 0)
    fail(ErrorCode::DomainError, "n must divide p - 1");
  CycValue sum;
  const i64 step = (f.p() - 1) / n;
  for (i64 t = 0; t < n; ++t) sum += Character(f, t * step).eval(a);
  return sum.as_integer();
}

namespace detail {

i64 count_points_formula_with(const CurveInstance& inst, const Character& eta) {
  inst.spec.validate();
  const PrimeField& f = *inst.field;
  const CurveSpec& s = inst.spec;
  if ((f.p() - 1) % s.N != 0)
    fail(ErrorCode::BadPrime,
         "point-count formula needs p = 1 mod N, p = " + std::to_string(f.p()));
  if (static_cast<i64>(inst.lambdas.size()) != s.n())
    fail(ErrorCode::DomainError, "lambda count must match curve spec");

  CycValue total;
  for (i64 m = 1; m < s.N; ++m) {
    AppellParams params{eta.pow(m * s.i), {}, eta.pow(m * (s.i + s.j)), inst.lambdas};
    params.bs.reserve(s.ks.size());
    for (i64 k : s.ks) params.bs.push_back(eta.pow(-m * k));
    total += pdn(params);
  }
  return 1 + f.p() + total.as_integer();
}

}  // namespace detail

i64 count_points_formula(const CurveInstance& inst) {
  if (inst.field == nullptr)
    fail(ErrorCode::DomainError, "curve instance has no field");
  if ((inst.field->p() - 1) % inst.spec.N != 0)
    fail(ErrorCode::BadPrime, "point-count formula needs p = 1 mod N");
  return detail::count_points_formula_with(inst, char_of_order(*inst.field, inst.spec.N));
}

i64 count_points_naive(const CurveInstance& inst) {
  inst.spec.validate();
  const PrimeField& f = *inst.field;
  const CurveSpec& s = inst.spec;
  if (static_cast<i64>(inst.lambdas.size()) != s.n())
    fail(ErrorCode::DomainError, "lambda count must match curve spec");
  const i64 p = f.p();

  std::vector<i64> roots(p, 0);  // roots[v] = #{y : y^N = v}
  for (i64 y = 0; y < p; ++y) roots[f.pow(y, s.N)]++;

  i64 count = 1;  // the point at infinity
  for (i64 x = 0; x < p; ++x) {
    i64 v = f.mul(f.pow(x, s.i), f.pow(f.reduce(1 - x), s.j));
    for (i64 t = 0; t < s.n(); ++t)
      v = f.mul(v, f.pow(f.reduce(1 - inst.lambdas[t] * x), s.ks[t]));
    count += roots[v];
  }
  return count;
}

i64 trace_of_frobenius(const CurveInstance& inst) {
  if (inst.field == nullptr)
    fail(ErrorCode::DomainError, "curve instance has no field");
  const i64 p = inst.field->p();
  const i64 count = (p - 1) % inst.spec.N == 0 ? count_points_formula(inst)
                                               : count_points_naive(inst);
  return 1 + p - count;
}

}  // namespace applf
