#pragma once

#include <vector>

#include "applf/cyclotomic.hpp"

namespace applf {

bool is_prime(i64 n);

/// Smallest primitive root modulo an odd prime p.
i64 smallest_primitive_root(i64 p);

/// F_p for an odd prime p, with the canonical generator (smallest primitive
/// root) and a full discrete-log table built by one pass of multiplication.
/// Immutable after construction; safe to share across threads.
class PrimeField {
 public:
  explicit PrimeField(i64 p);  // NotAnOddPrime

  i64 p() const { return p_; }
  i64 generator() const { return g_; }

  /// Exponent e in [0, p-2] with g^e = a.  ZeroHasNoLog if a == 0.
  i64 dlog(i64 a) const;

  i64 reduce(i64 x) const;  // canonical representative in [0, p)
  i64 add(i64 a, i64 b) const { return reduce(reduce(a) + reduce(b)); }
  i64 sub(i64 a, i64 b) const { return reduce(reduce(a) - reduce(b)); }
  i64 mul(i64 a, i64 b) const { return reduce(a) * reduce(b) % p_; }
  i64 neg(i64 a) const { return reduce(-reduce(a)); }
  i64 pow(i64 a, i64 e) const;
  i64 inv(i64 a) const;  // DomainError on zero

 private:
  i64 p_;
  i64 g_;
  std::vector<i64> log_;
};

inline PrimeField make_field(i64 p) { return PrimeField(p); }

/// Multiplicative character chi with chi(g^k) = zeta_{p-1}^{m k}, extended by
/// chi(0) = 0.  Identified by the exponent m modulo p-1.
class Character {
 public:
  Character(const PrimeField& f, i64 m);

  const PrimeField& field() const { return *f_; }
  i64 exponent() const { return m_; }
  i64 order() const;
  bool is_trivial() const { return m_ == 0; }

  Character conj() const;
  Character pow(i64 k) const;
  Character operator*(const Character& o) const;  // FieldMismatch

  /// chi(-1) as +1 or -1.
  int at_minus_one() const { return m_ % 2 == 0 ? 1 : -1; }

  /// Exact value chi(a) at the minimal cyclotomic level order(chi).
  CycValue eval(i64 a) const;

  bool operator==(const Character& o) const {
    return f_->p() == o.f_->p() && m_ == o.m_;
  }
  bool operator!=(const Character& o) const { return !(*this == o); }

 private:
  const PrimeField* f_;
  i64 m_;
};

Character trivial_character(const PrimeField& f);

/// Canonical primitive character of order N: exponent (p-1)/N.
/// OrderDoesNotDivide unless N | p-1.
Character char_of_order(const PrimeField& f, i64 n);

inline int delta(const Character& chi) { return chi.is_trivial() ? 1 : 0; }
inline int delta(const PrimeField& f, i64 x) { return f.reduce(x) == 0 ? 1 : 0; }

void check_same_field(const Character& a, const Character& b);

}  // namespace applf
