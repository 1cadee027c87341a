#include "applf/appell.hpp"

#include <numeric>

#include "applf/errors.hpp"
#include "applf/jacobi.hpp"

namespace applf {

void AppellParams::validate() const {
  if (bs.empty())
    fail(ErrorCode::DomainError, "AppellParams needs at least one B character");
  if (bs.size() != lambdas.size())
    fail(ErrorCode::DomainError, "lambda count must match B character count");
  const i64 p = a.field().p();
  if (c.field().p() != p)
    fail(ErrorCode::FieldMismatch, "characters over different prime fields");
  for (const Character& b : bs)
    if (b.field().p() != p)
      fail(ErrorCode::FieldMismatch, "characters over different prime fields");
}

namespace {

i64 working_level(const AppellParams& params) {
  i64 level = std::lcm(params.a.order(), params.c.order());
  for (const Character& b : params.bs) level = std::lcm(level, b.order());
  return level;
}

// Exponent of zeta_level for chi evaluated on the generator, i.e. the factor
// s with chi(g^k) = zeta_level^{s k}.
i64 scaled_exponent(const Character& chi, i64 level) {
  const i64 n = chi.field().p() - 1;
  return chi.exponent() / (n / level) % level;
}

}  // namespace

CycValue pdn(const AppellParams& params) {
  params.validate();
  const PrimeField& f = params.field();
  const i64 p = f.p();
  const i64 level = working_level(params);
  const i64 n = params.n();

  const i64 sa = scaled_exponent(params.a, level);
  const i64 sca = scaled_exponent(params.c * params.a.conj(), level);
  std::vector<i64> sb(n);
  for (i64 i = 0; i < n; ++i) sb[i] = scaled_exponent(params.bs[i].conj(), level);
  std::vector<i64> lam(n);
  for (i64 i = 0; i < n; ++i) lam[i] = f.reduce(params.lambdas[i]);

  std::vector<i64> counts(level, 0);
  for (i64 y = 1; y < p; ++y) {  // y = 0 gives A(0) = 0
    i64 e = sa * f.dlog(y);
    const i64 t = f.reduce(1 - y);
    if (t == 0) continue;  // (C conj A)(0) = 0, trivial character included
    e += sca * f.dlog(t);
    bool dead = false;
    for (i64 i = 0; i < n; ++i) {
      const i64 u = f.reduce(1 - lam[i] * y % p);
      if (u == 0) {
        dead = true;
        break;
      }
      e += sb[i] * f.dlog(u);
    }
    if (dead) continue;
    counts[e % level]++;
  }
  return CycValue::from_power_counts(level, counts);
}

CycFraction fdn(const AppellParams& params) {
  params.validate();
  return CycFraction(pdn(params), jacobi_sum(params.a, params.c * params.a.conj()));
}

CycValue pp1(const Character& a, const Character& b, const Character& c, i64 lambda) {
  return pdn(AppellParams{b, {a}, c, {lambda}});
}

CycFraction ff2f1(const Character& a, const Character& b, const Character& c, i64 lambda) {
  return CycFraction(pp1(a, b, c, lambda), jacobi_sum(b, c * b.conj()));
}

CycValue pdn_via_jacobi(const AppellParams& params) {
  params.validate();
  const PrimeField& f = params.field();
  const i64 p = f.p();
  const i64 n = p - 1;
  const i64 nv = params.n();

  std::vector<i64> lam(nv);
  for (i64 i = 0; i < nv; ++i) lam[i] = f.reduce(params.lambdas[i]);
  if (nv >= 2)
    for (i64 l : lam)
      if (l == 0)
        fail(ErrorCode::DomainError,
             "pdn_via_jacobi requires nonzero lambda for n >= 2");

  // Full Jacobi table at level p-1: jt[x][y] = J(chi^x, chi^y).
  std::vector<std::vector<CycValue>> jt(n, std::vector<CycValue>(n));
  for (i64 x = 0; x < n; ++x)
    for (i64 y = 0; y < n; ++y)
      jt[x][y] = jacobi_sum(Character(f, x), Character(f, y)).embedded(n);

  const i64 ma = params.a.exponent();
  const i64 mc = params.c.exponent();
  const auto neg = [n](i64 m) { return (n - m % n) % n; };

  const CycValue ja_ca = jt[ma][(mc + neg(ma)) % n];  // J(A, C conj A)

  if (nv == 1) {
    const i64 mb = params.bs[0].exponent();
    CycValue sum = CycValue::zero(n);
    if (lam[0] != 0) {
      const i64 k = f.dlog(lam[0]);
      for (i64 m = 0; m < n; ++m) {
        CycValue term = jt[(mb + m) % n][neg(m)] * jt[(ma + m) % n][neg((mc + m) % n)];
        sum += term * CycValue::root_power(n, m * k % n);
      }
    }
    CycValue out = sum.divided_exact(n) * static_cast<i64>(params.a.at_minus_one());
    if (lam[0] == 0) out += ja_ca;
    return out;
  }

  // General branch: odometer over (chi_1, ..., chi_n) exponents.
  std::vector<i64> mb(nv), klam(nv);
  for (i64 i = 0; i < nv; ++i) {
    mb[i] = params.bs[i].exponent();
    klam[i] = f.dlog(lam[i]);
  }
  std::vector<i64> idx(nv, 0);
  CycValue sum = CycValue::zero(n);
  while (true) {
    i64 mtot = 0, rot = 0;
    for (i64 i = 0; i < nv; ++i) {
      mtot += idx[i];
      rot += idx[i] * klam[i];
    }
    mtot %= n;
    CycValue term = jt[(ma + mtot) % n][neg((mc + mtot) % n)];
    for (i64 i = 0; i < nv; ++i) term = term * jt[(mb[i] + idx[i]) % n][neg(idx[i])];
    sum += term * CycValue::root_power(n, rot % n);

    i64 pos = 0;
    while (pos < nv && ++idx[pos] == n) idx[pos++] = 0;
    if (pos == nv) break;
  }
  i64 divisor = 1;
  for (i64 i = 0; i < nv; ++i) divisor *= n;
  return sum.divided_exact(divisor) * static_cast<i64>(params.a.at_minus_one());
}

bool is_primitive(const AppellParams& params) {
  if (params.a.is_trivial() || params.a == params.c) return false;
  for (const Character& b : params.bs)
    if (b.is_trivial() || b == params.c) return false;
  return true;
}

}  // namespace applf
