#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace applf {

using i64 = std::int64_t;

/// Per-level data for arithmetic in Z[zeta_n]: the cyclotomic polynomial
/// Phi_n and the expansion of every root power zeta_n^k (0 <= k < n) in the
/// integral basis 1, zeta_n, ..., zeta_n^{phi(n)-1}.
struct CycLevel {
  i64 n;
  int phi;
  std::vector<i64> minpoly;                // Phi_n, ascending, monic, size phi+1
  std::vector<std::vector<i64>> powers;    // powers[k] = zeta_n^k in basis
};

/// Shared, lazily built level table (thread safe).
const CycLevel& cyc_level(i64 n);

/// Phi_n as an ascending integer coefficient vector.
std::vector<i64> cyclotomic_poly(i64 n);

i64 euler_phi(i64 n);

/// Exact element of Z[zeta_n], stored as phi(n) integer coordinates in the
/// power basis.  Arithmetic reduces modulo Phi_n.  Values at level m embed
/// into any level n with m | n via zeta_m -> zeta_n^{n/m}; mixed-level
/// operations promote to the lcm level.
class CycValue {
 public:
  CycValue() : level_(1), c_{0} {}

  static CycValue zero(i64 level = 1);
  static CycValue integer(i64 v);
  static CycValue root_power(i64 n, i64 k);  // zeta_n^k
  static CycValue from_power_counts(i64 n, std::span<const i64> counts);
  static CycValue from_coeffs(i64 n, std::vector<i64> coeffs);

  i64 level() const { return level_; }
  const std::vector<i64>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_integer() const;
  i64 as_integer() const;  // NonIntegerResult if not a rational integer

  /// Re-express at a coarser-to-finer level; requires level() | new_level.
  CycValue embedded(i64 new_level) const;

  CycValue operator-() const;
  CycValue& operator+=(const CycValue& o);
  CycValue& operator-=(const CycValue& o);
  friend CycValue operator+(CycValue a, const CycValue& b) { return a += b; }
  friend CycValue operator-(CycValue a, const CycValue& b) { return a -= b; }
  CycValue operator*(const CycValue& o) const;
  CycValue operator*(i64 s) const;
  friend CycValue operator*(i64 s, const CycValue& v) { return v * s; }

  /// Exact division by a nonzero integer; every coordinate must be divisible.
  CycValue divided_exact(i64 d) const;

  bool operator==(const CycValue& o) const;
  bool operator!=(const CycValue& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  i64 level_;
  std::vector<i64> c_;
};

/// Formal quotient in Z[zeta]; equality is cross-multiplication, which is
/// sound because Z[zeta_n] is an integral domain.  No reduction is attempted.
class CycFraction {
 public:
  CycFraction(CycValue num, CycValue den);  // ZeroNormalizer if den == 0

  const CycValue& num() const { return num_; }
  const CycValue& den() const { return den_; }

  CycFraction operator*(const CycFraction& o) const;
  CycFraction operator+(const CycFraction& o) const;
  CycFraction operator*(const CycValue& v) const;

  bool operator==(const CycFraction& o) const;
  bool operator!=(const CycFraction& o) const { return !(*this == o); }

 private:
  CycValue num_, den_;
};

}  // namespace applf
