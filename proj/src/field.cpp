#include "applf/field.hpp"

#include <numeric>
#include <string>

#include "applf/errors.hpp"

namespace applf {

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
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

}  // namespace

i64 smallest_primitive_root(i64 p) {
  const auto factors = prime_factors(p - 1);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : factors)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found (p not prime?)");
}

PrimeField::PrimeField(i64 p) : p_(p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    fail(ErrorCode::NotAnOddPrime, std::to_string(p) + " is not an odd prime");
  g_ = smallest_primitive_root(p);
  log_.assign(p, 0);
  i64 acc = 1;
  for (i64 k = 0; k < p - 1; ++k) {
    log_[acc] = k;
    acc = acc * g_ % p;
  }
}

i64 PrimeField::dlog(i64 a) const {
  a = reduce(a);
  if (a == 0) fail(ErrorCode::ZeroHasNoLog, "dlog(0) is undefined");
  return log_[a];
}

i64 PrimeField::reduce(i64 x) const {
  x %= p_;
  return x < 0 ? x + p_ : x;
}

i64 PrimeField::pow(i64 a, i64 e) const {
  a = reduce(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  return pow_mod(a, e, p_);
}

i64 PrimeField::inv(i64 a) const {
  a = reduce(a);
  if (a == 0) fail(ErrorCode::DomainError, "inverse of zero");
  return pow_mod(a, p_ - 2, p_);
}

Character::Character(const PrimeField& f, i64 m) : f_(&f) {
  const i64 n = f.p() - 1;
  m %= n;
  m_ = m < 0 ? m + n : m;
}

i64 Character::order() const {
  const i64 n = f_->p() - 1;
  return n / std::gcd(m_, n);
}

Character Character::conj() const { return Character(*f_, -m_); }

Character Character::pow(i64 k) const {
  // Reduce the multiplier first so k * m_ cannot overflow for large k.
  const i64 n = f_->p() - 1;
  k %= n;
  return Character(*f_, m_ * k);
}

Character Character::operator*(const Character& o) const {
  check_same_field(*this, o);
  return Character(*f_, m_ + o.m_);
}

CycValue Character::eval(i64 a) const {
  a = f_->reduce(a);
  if (a == 0) return CycValue::zero();
  const i64 n = f_->p() - 1;
  const i64 d = order();
  const i64 scaled = m_ / (n / d);  // exponent of zeta_d
  return CycValue::root_power(d, scaled * f_->dlog(a) % d);
}

Character trivial_character(const PrimeField& f) { return Character(f, 0); }

Character char_of_order(const PrimeField& f, i64 n) {
  if (n < 1 || (f.p() - 1) % n != 0)
    fail(ErrorCode::OrderDoesNotDivide,
         "order " + std::to_string(n) + " does not divide p-1 = " +
             std::to_string(f.p() - 1));
  return Character(f, (f.p() - 1) / n);
}

void check_same_field(const Character& a, const Character& b) {
  if (a.field().p() != b.field().p())
    fail(ErrorCode::FieldMismatch, "characters over different prime fields");
}

}  // namespace applf
