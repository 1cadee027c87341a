#include "applf/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "applf/errors.hpp"

namespace applf {

namespace {

// Exact division of integer polynomials by a monic divisor (ascending coeffs).
std::vector<i64> poly_div_exact(std::vector<i64> num, const std::vector<i64>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dn < dd) throw std::logic_error("poly_div_exact: degree underflow");
  std::vector<i64> q(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    i64 coef = num[k + dd];  // den is monic
    q[k] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= dd; ++j) num[k + j] -= coef * den[j];
  }
  for (i64 r : num)
    if (r != 0) throw std::logic_error("poly_div_exact: inexact division");
  return q;
}

std::vector<i64> cyclotomic_poly_impl(i64 n) {
  if (n == 1) return {-1, 1};
  std::vector<i64> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;  // x^n - 1
  for (i64 d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = poly_div_exact(std::move(poly), cyclotomic_poly_impl(d));
  }
  return poly;
}

}  // namespace

i64 euler_phi(i64 n) {
  i64 result = n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<i64> cyclotomic_poly(i64 n) {
  if (n < 1) throw std::logic_error("cyclotomic_poly: n must be positive");
  return cyclotomic_poly_impl(n);
}

const CycLevel& cyc_level(i64 n) {
  static std::mutex mu;
  static std::map<i64, std::unique_ptr<CycLevel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto lvl = std::make_unique<CycLevel>();
  lvl->n = n;
  lvl->minpoly = cyclotomic_poly_impl(n);
  lvl->phi = static_cast<int>(lvl->minpoly.size()) - 1;
  const int phi = lvl->phi;
  lvl->powers.resize(n);
  for (i64 k = 0; k < n; ++k) {
    auto& row = lvl->powers[k];
    if (k < phi) {
      row.assign(phi, 0);
      row[k] = 1;
      continue;
    }
    // x * powers[k-1] reduced by the monic minimal polynomial.
    const auto& prev = lvl->powers[k - 1];
    row.assign(phi, 0);
    for (int i = 1; i < phi; ++i) row[i] = prev[i - 1];
    i64 lead = prev[phi - 1];
    if (lead != 0)
      for (int i = 0; i < phi; ++i) row[i] -= lead * lvl->minpoly[i];
  }
  const CycLevel& ref = *lvl;
  cache.emplace(n, std::move(lvl));
  return ref;
}

CycValue CycValue::zero(i64 level) {
  CycValue v;
  v.level_ = level;
  v.c_.assign(cyc_level(level).phi, 0);
  return v;
}

CycValue CycValue::integer(i64 value) {
  CycValue v;
  v.level_ = 1;
  v.c_ = {value};
  return v;
}

CycValue CycValue::root_power(i64 n, i64 k) {
  const CycLevel& lvl = cyc_level(n);
  k %= n;
  if (k < 0) k += n;
  CycValue v;
  v.level_ = n;
  v.c_ = lvl.powers[k];
  return v;
}

CycValue CycValue::from_power_counts(i64 n, std::span<const i64> counts) {
  const CycLevel& lvl = cyc_level(n);
  if (static_cast<i64>(counts.size()) != n)
    throw std::logic_error("from_power_counts: counts size must equal level");
  CycValue v;
  v.level_ = n;
  v.c_.assign(lvl.phi, 0);
  for (i64 k = 0; k < n; ++k) {
    i64 m = counts[k];
    if (m == 0) continue;
    const auto& row = lvl.powers[k];
    for (int i = 0; i < lvl.phi; ++i) v.c_[i] += m * row[i];
  }
  return v;
}

CycValue CycValue::from_coeffs(i64 n, std::vector<i64> coeffs) {
  const CycLevel& lvl = cyc_level(n);
  if (static_cast<int>(coeffs.size()) != lvl.phi)
    throw std::logic_error("from_coeffs: wrong coefficient count");
  CycValue v;
  v.level_ = n;
  v.c_ = std::move(coeffs);
  return v;
}

bool CycValue::is_zero() const {
  for (i64 x : c_)
    if (x != 0) return false;
  return true;
}

bool CycValue::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

i64 CycValue::as_integer() const {
  if (!is_integer())
    fail(ErrorCode::NonIntegerResult,
         "cyclotomic value is not a rational integer: " + to_string());
  return c_[0];
}

CycValue CycValue::embedded(i64 new_level) const {
  if (new_level == level_) return *this;
  if (new_level % level_ != 0)
    throw std::logic_error("embedded: target level not a multiple");
  const i64 stride = new_level / level_;
  std::vector<i64> counts(new_level, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    counts[static_cast<i64>(i) * stride] += c_[i];
  return from_power_counts(new_level, counts);
}

CycValue CycValue::operator-() const {
  CycValue v = *this;
  for (i64& x : v.c_) x = -x;
  return v;
}

CycValue& CycValue::operator+=(const CycValue& o) {
  if (level_ == o.level_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  i64 l = std::lcm(level_, o.level_);
  *this = embedded(l);
  CycValue rhs = o.embedded(l);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CycValue& CycValue::operator-=(const CycValue& o) {
  return *this += -o;
}

CycValue CycValue::operator*(const CycValue& o) const {
  if (level_ != o.level_) {
    i64 l = std::lcm(level_, o.level_);
    return embedded(l) * o.embedded(l);
  }
  const CycLevel& lvl = cyc_level(level_);
  const int phi = lvl.phi;
  std::vector<i64> conv(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) conv[i + j] += c_[i] * o.c_[j];
  }
  CycValue v;
  v.level_ = level_;
  v.c_.assign(phi, 0);
  for (int j = 0; j < static_cast<int>(conv.size()); ++j) {
    i64 m = conv[j];
    if (m == 0) continue;
    const auto& row = lvl.powers[j % level_];  // zeta^n = 1
    for (int i = 0; i < phi; ++i) v.c_[i] += m * row[i];
  }
  return v;
}

CycValue CycValue::operator*(i64 s) const {
  CycValue v = *this;
  for (i64& x : v.c_) x *= s;
  return v;
}

CycValue CycValue::divided_exact(i64 d) const {
  if (d == 0) throw std::logic_error("divided_exact: zero divisor");
  CycValue v = *this;
  for (i64& x : v.c_) {
    if (x % d != 0)
      throw std::logic_error("divided_exact: inexact division by " + std::to_string(d));
    x /= d;
  }
  return v;
}

bool CycValue::operator==(const CycValue& o) const {
  if (level_ == o.level_) return c_ == o.c_;
  i64 l = std::lcm(level_, o.level_);
  return embedded(l).c_ == o.embedded(l).c_;
}

std::string CycValue::to_string() const {
  std::ostringstream os;
  os << "[level " << level_ << ":";
  for (i64 x : c_) os << ' ' << x;
  os << "]";
  return os.str();
}

CycFraction::CycFraction(CycValue num, CycValue den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    fail(ErrorCode::ZeroNormalizer, "zero denominator in cyclotomic fraction");
}

CycFraction CycFraction::operator*(const CycFraction& o) const {
  return CycFraction(num_ * o.num_, den_ * o.den_);
}

CycFraction CycFraction::operator+(const CycFraction& o) const {
  return CycFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

CycFraction CycFraction::operator*(const CycValue& v) const {
  return CycFraction(num_ * v, den_);
}

bool CycFraction::operator==(const CycFraction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAnOddPrime: return "NotAnOddPrime";
    case ErrorCode::ZeroHasNoLog: return "ZeroHasNoLog";
    case ErrorCode::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroNormalizer: return "ZeroNormalizer";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::PoleInC: return "PoleInC";
    case ErrorCode::BadDenominator: return "BadDenominator";
    case ErrorCode::NotConvergent: return "NotConvergent";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::IncompatiblePrime: return "IncompatiblePrime";
    case ErrorCode::UnknownIdentity: return "UnknownIdentity";
    case ErrorCode::EmptyRange: return "EmptyRange";
  }
  return "UnknownError";
}

}  // namespace applf
