#pragma once

#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "applf/cyclotomic.hpp"

namespace applf {

/// Exact rational with 128-bit numerator/denominator, always reduced with a
/// positive denominator.  Arithmetic throws std::overflow_error rather than
/// wrapping; the truncation degrees used here stay far inside the range.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(i64 n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(i64 n, i64 d);

  static Rational raw(__int128 n, __int128 d);

  __int128 num128() const { return num_; }
  __int128 den128() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // DomainError on zero
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  double to_double() const;
  std::string to_string() const;

 private:
  __int128 num_, den_;
  void normalize();
};

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, i64 n);

struct SeriesParams {
  Rational a;
  std::vector<Rational> bs;
  Rational c;
};

/// Coefficient of x_1^{i_1} ... x_n^{i_n} in the Appell-Lauricella series.
Rational fdn_coeff(const SeriesParams& params, std::span<const i64> idx);  // PoleInC

/// Exact partial sum over all index tuples of total degree <= max_degree.
Rational fdn_truncated(const SeriesParams& params, std::span<const Rational> xs,
                       i64 max_degree);

struct NumericEval {
  std::complex<double> value;
  i64 degree_used = 0;
  double tail_bound = 0.0;
};

/// Floating evaluation of the series for |x_i| < 1 with a certified geometric
/// tail bound; stops once the bound falls below tol.  NotConvergent if some
/// |x_i| >= 1 or the bound cannot be met.
NumericEval fdn_numeric(double a, std::span<const double> bs, double c,
                        std::span<const std::complex<double>> xs, double tol);

/// k/d mod p via modular inverse; BadDenominator if p | d.
i64 fp_of_rational(i64 p, i64 num, i64 den);

/// (a)_m mod p for a field element a.
i64 pochhammer_fp(i64 p, i64 a, i64 m);

/// Truncated F_D^(2) sum evaluated entirely in F_p; PoleInC if some (c)_m
/// vanishes mod p for m <= max_degree.
i64 truncated_fd2_fp(i64 p, i64 a, i64 b1, i64 b2, i64 c, i64 s, i64 t,
                     i64 max_degree);

/// Coefficient of x^{p-1} in (x^2 (1-x) (1-sx) (1-tx))^{(p-1)/3} mod p,
/// by direct polynomial expansion.  BadPrime unless p is a prime = 1 mod 3.
i64 hasse_invariant(i64 p, i64 s, i64 t);

/// zeta_1 = (1 + w lambda + w^2 mu) / (1 + lambda + mu) and its conjugate
/// expression, with w = g^{(p-1)/3} for the smallest primitive root g.
/// BadPrime unless p = 1 mod 3; DegenerateDenominator if 1+lambda+mu = 0.
std::pair<i64, i64> zeta_pair(i64 p, i64 lambda, i64 mu);

}  // namespace applf
