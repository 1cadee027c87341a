#include "applf/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "applf/errors.hpp"
#include "applf/field.hpp"

namespace applf {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

__int128 mul128_checked(__int128 a, __int128 b) {
  __int128 out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("rational arithmetic overflow");
  return out;
}

__int128 add128_checked(__int128 a, __int128 b) {
  __int128 out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("rational arithmetic overflow");
  return out;
}

std::string i128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

i64 pow_mod(i64 a, i64 e, i64 p) {
  i64 r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

i64 inv_mod(i64 a, i64 p) { return pow_mod(a, p - 2, p); }

}  // namespace

Rational::Rational(i64 n, i64 d) : num_(n), den_(d) {
  if (d == 0) fail(ErrorCode::DomainError, "rational with zero denominator");
  normalize();
}

Rational Rational::raw(__int128 n, __int128 d) {
  if (d == 0) fail(ErrorCode::DomainError, "rational with zero denominator");
  Rational r;
  r.num_ = n;
  r.den_ = d;
  r.normalize();
  return r;
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  __int128 g = gcd128(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const { return raw(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
  // Work over the lcm of the denominators to keep intermediates small.
  const __int128 g = gcd128(den_, o.den_);
  const __int128 right = o.den_ / g;
  return raw(add128_checked(mul128_checked(num_, right),
                            mul128_checked(o.num_, den_ / g)),
             mul128_checked(den_, right));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  const __int128 g1 = gcd128(num_, o.den_);
  const __int128 g2 = gcd128(o.num_, den_);
  return raw(mul128_checked(num_ / g1, o.num_ / g2),
             mul128_checked(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) fail(ErrorCode::DomainError, "division by zero rational");
  return raw(mul128_checked(num_, o.den_), mul128_checked(den_, o.num_));
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  std::string s = i128_to_string(num_);
  if (den_ != 1) s += "/" + i128_to_string(den_);
  return s;
}

Rational pochhammer(const Rational& a, i64 n) {
  Rational out(1);
  Rational term = a;
  for (i64 k = 0; k < n; ++k) {
    out *= term;
    term += Rational(1);
  }
  return out;
}

Rational fdn_coeff(const SeriesParams& params, std::span<const i64> idx) {
  if (idx.size() != params.bs.size())
    fail(ErrorCode::DomainError, "index arity must match parameter count");
  i64 total = 0;
  for (i64 i : idx) total += i;
  const Rational cp = pochhammer(params.c, total);
  if (cp.is_zero())
    fail(ErrorCode::PoleInC, "(c)_" + std::to_string(total) + " vanishes");
  Rational out = pochhammer(params.a, total) / cp;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    out *= pochhammer(params.bs[t], idx[t]);
    for (i64 f = 2; f <= idx[t]; ++f) out = out / Rational(f);
  }
  return out;
}

namespace {

// Enumerate compositions of each total degree d <= max_degree and fold.
template <typename Fn>
void for_each_tuple(i64 arity, i64 max_degree, Fn&& fn) {
  std::vector<i64> idx(arity, 0);
  // Iterate tuples with sum <= max_degree in odometer order.
  while (true) {
    i64 sum = 0;
    for (i64 v : idx) sum += v;
    if (sum <= max_degree) fn(std::span<const i64>(idx));
    // Advance: standard mixed-radix with pruning on the running sum.
    i64 pos = 0;
    while (pos < arity) {
      ++idx[pos];
      i64 s = 0;
      for (i64 v : idx) s += v;
      if (s <= max_degree) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == arity) break;
  }
}

}  // namespace

Rational fdn_truncated(const SeriesParams& params, std::span<const Rational> xs,
                       i64 max_degree) {
  if (xs.size() != params.bs.size())
    fail(ErrorCode::DomainError, "argument arity must match parameter count");
  for (i64 m = 0; m <= max_degree; ++m)
    if (pochhammer(params.c, m).is_zero())
      fail(ErrorCode::PoleInC, "(c)_" + std::to_string(m) + " vanishes");

  Rational sum(0);
  for_each_tuple(static_cast<i64>(xs.size()), max_degree, [&](std::span<const i64> idx) {
    Rational term = fdn_coeff(params, idx);
    for (std::size_t t = 0; t < xs.size(); ++t)
      for (i64 k = 0; k < idx[t]; ++k) term *= xs[t];
    sum += term;
  });
  return sum;
}

NumericEval fdn_numeric(double a, std::span<const double> bs, double c,
                        std::span<const std::complex<double>> xs, double tol) {
  const i64 n = static_cast<i64>(bs.size());
  if (xs.size() != bs.size())
    fail(ErrorCode::NotConvergent, "argument arity must match parameter count");
  double r = 0.0;
  for (const auto& x : xs) r = std::max(r, std::abs(x));
  if (r >= 1.0)
    fail(ErrorCode::NotConvergent, "series requires |x_i| < 1");

  constexpr i64 kMaxDegree = 20000;
  NumericEval out;
  std::complex<double> sum = 0.0;
  double max_row = 0.0;
  double prev_row = std::numeric_limits<double>::infinity();
  int nonincreasing_streak = 0;
  std::vector<i64> idx(n, 0);

  for (i64 d = 0;; ++d) {
    // Row d: all tuples with i_1 + ... + i_n = d.
    double row_abs = 0.0;
    std::complex<double> row = 0.0;
    std::fill(idx.begin(), idx.end(), 0);
    if (n > 0) idx[0] = d;
    while (true) {
      double coeff = 1.0;
      // (a)_d / (c)_d and the per-slot factors, computed termwise.
      double num = 1.0;
      for (i64 k = 0; k < d; ++k) num *= (a + k) / (c + k);
      coeff = num;
      std::complex<double> term = coeff;
      for (i64 t = 0; t < n; ++t) {
        double bf = 1.0;
        for (i64 k = 0; k < idx[t]; ++k) bf *= (bs[t] + k) / (k + 1.0);
        term *= bf;
        for (i64 k = 0; k < idx[t]; ++k) term *= xs[t];
        coeff *= std::abs(bf);
      }
      row += term;
      row_abs += std::abs(coeff);
      // Next composition of d.
      if (n <= 1) break;
      i64 pos = n - 2;
      while (pos >= 0 && idx[pos] == 0) --pos;
      if (pos < 0) break;
      --idx[pos];
      i64 tail = d;
      for (i64 t = 0; t <= pos; ++t) tail -= idx[t];
      idx[pos + 1] = tail;
      for (i64 t = pos + 2; t < n; ++t) idx[t] = 0;
    }
    sum += row;
    max_row = std::max(max_row, row_abs);
    if (r == 0.0) {
      out.value = sum;
      out.degree_used = d;
      out.tail_bound = 0.0;
      return out;
    }
    // The geometric tail bound is only trusted once the coefficient rows
    // have stopped growing, so the running maximum really dominates the tail.
    nonincreasing_streak = row_abs <= prev_row ? nonincreasing_streak + 1 : 0;
    prev_row = row_abs;
    const double bound = max_row * std::pow(r, static_cast<double>(d + 1)) / (1.0 - r);
    if (bound < tol && nonincreasing_streak >= 2) {
      out.value = sum;
      out.degree_used = d;
      out.tail_bound = bound;
      return out;
    }
    if (d >= kMaxDegree)
      fail(ErrorCode::NotConvergent, "tail bound not met before degree cap");
  }
}

i64 fp_of_rational(i64 p, i64 num, i64 den) {
  if (den % p == 0)
    fail(ErrorCode::BadDenominator,
         "denominator " + std::to_string(den) + " not invertible mod " + std::to_string(p));
  i64 d = den % p;
  if (d < 0) d += p;
  i64 n = num % p;
  if (n < 0) n += p;
  return n * inv_mod(d, p) % p;
}

i64 pochhammer_fp(i64 p, i64 a, i64 m) {
  a %= p;
  if (a < 0) a += p;
  i64 out = 1 % p;
  for (i64 k = 0; k < m; ++k) out = out * ((a + k) % p) % p;
  return out;
}

i64 truncated_fd2_fp(i64 p, i64 a, i64 b1, i64 b2, i64 c, i64 s, i64 t,
                     i64 max_degree) {
  const i64 M = max_degree;
  if (M >= p)
    fail(ErrorCode::PoleInC, "factorials vanish mod p beyond degree p - 1");
  std::vector<i64> pa(M + 1), pb1(M + 1), pb2(M + 1), pc(M + 1), inv_fact(M + 1);
  pa[0] = pb1[0] = pb2[0] = pc[0] = 1;
  auto red = [p](i64 v) { v %= p; return v < 0 ? v + p : v; };
  const i64 ra = red(a), rb1 = red(b1), rb2 = red(b2), rc = red(c);
  for (i64 m = 1; m <= M; ++m) {
    pa[m] = pa[m - 1] * ((ra + m - 1) % p) % p;
    pb1[m] = pb1[m - 1] * ((rb1 + m - 1) % p) % p;
    pb2[m] = pb2[m - 1] * ((rb2 + m - 1) % p) % p;
    pc[m] = pc[m - 1] * ((rc + m - 1) % p) % p;
    if (pc[m] == 0)
      fail(ErrorCode::PoleInC, "(c)_" + std::to_string(m) + " vanishes mod p");
  }
  i64 fact = 1;
  for (i64 m = 0; m <= M; ++m) {
    if (m > 0) fact = fact * (m % p) % p;
    inv_fact[m] = inv_mod(fact, p);
  }
  const i64 rs = red(s), rt = red(t);
  i64 sum = 0;
  i64 spow = 1;
  for (i64 i = 0; i <= M; ++i) {
    i64 tpow = 1;
    for (i64 j = 0; i + j <= M; ++j) {
      i64 term = pa[i + j] * pb1[i] % p * pb2[j] % p;
      term = term * inv_mod(pc[i + j], p) % p;
      term = term * inv_fact[i] % p * inv_fact[j] % p;
      term = term * spow % p * tpow % p;
      sum = (sum + term) % p;
      tpow = tpow * rt % p;
    }
    spow = spow * rs % p;
  }
  return sum;
}

i64 hasse_invariant(i64 p, i64 s, i64 t) {
  if (!is_prime(p) || p % 3 != 1)
    fail(ErrorCode::BadPrime,
         "Hasse invariant of the cubic model needs a prime p = 1 mod 3");
  const i64 m = (p - 1) / 3;
  auto red = [p](i64 v) { v %= p; return v < 0 ? v + p : v; };
  const i64 rs = red(s), rt = red(t);
  // x^2 (1-x) (1-sx) (1-tx), ascending coefficients.
  std::vector<i64> base = {0, 0, 1, red(-(1 + rs + rt)), red(rs + rt + rs * rt % p),
                           red(-(rs * rt % p))};
  std::vector<i64> poly = {1};
  for (i64 e = 0; e < m; ++e) {
    std::vector<i64> next(poly.size() + base.size() - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0) continue;
      for (std::size_t j = 0; j < base.size(); ++j)
        next[i + j] = (next[i + j] + poly[i] * base[j]) % p;
    }
    poly = std::move(next);
  }
  return static_cast<std::size_t>(p - 1) < poly.size() ? poly[p - 1] : 0;
}

std::pair<i64, i64> zeta_pair(i64 p, i64 lambda, i64 mu) {
  if (!is_prime(p) || p % 3 != 1)
    fail(ErrorCode::BadPrime, "zeta pair needs a prime p = 1 mod 3");
  auto red = [p](i64 v) { v %= p; return v < 0 ? v + p : v; };
  lambda = red(lambda);
  mu = red(mu);
  const i64 den = red(1 + lambda + mu);
  if (den == 0)
    fail(ErrorCode::DegenerateDenominator, "1 + lambda + mu = 0");
  const i64 g = smallest_primitive_root(p);
  const i64 w = pow_mod(g, (p - 1) / 3, p);
  const i64 w2 = w * w % p;
  const i64 inv_den = inv_mod(den, p);
  const i64 z1 = red(1 + w * lambda + w2 * mu) * inv_den % p;
  const i64 z2 = red(1 + w2 * lambda + w * mu) * inv_den % p;
  return {z1, z2};
}

}  // namespace applf
