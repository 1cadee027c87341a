#include <array>
#include <cmath>
#include <complex>
#include <memory>

#include "applf/classical.hpp"
#include "verify_internal.hpp"

namespace applf::verify_detail {

namespace {

constexpr double kTol = 1e-8;        // comparison tolerance, pinned
constexpr double kSideTol = 1e-10;   // per-side certified truncation target

using cplx = std::complex<double>;

struct RatParams {
  Rational a, b1, b2, c;
  double ad() const { return a.to_double(); }
  double b1d() const { return b1.to_double(); }
  double b2d() const { return b2.to_double(); }
  double cd() const { return c.to_double(); }
};

const std::array<RatParams, 4>& param_sets() {
  static const std::array<RatParams, 4> sets = {
      RatParams{Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(1)},
      RatParams{Rational(1, 2), Rational(1, 4), Rational(1, 6), Rational(5, 4)},
      RatParams{Rational(2, 3), Rational(1, 5), Rational(2, 5), Rational(7, 6)},
      RatParams{Rational(1), Rational(1, 2), Rational(1, 2), Rational(3, 2)},
  };
  return sets;
}

cplx eval2(double a, double b1, double b2, double c, cplx x, cplx y) {
  const std::array<double, 2> bs = {b1, b2};
  const std::array<cplx, 2> xs = {x, y};
  return fdn_numeric(a, bs, c, xs, kSideTol).value;
}

cplx eval1(double a, double b, double c, cplx x) {
  const std::array<double, 1> bs = {b};
  const std::array<cplx, 1> xs = {x};
  return fdn_numeric(a, bs, c, xs, kSideTol).value;
}

struct ClassicalCaseSet : CaseSet {
  std::vector<Slot> slots_;
  const std::vector<Slot>& slots() const override { return slots_; }
};

struct PfaffSet : ClassicalCaseSet {
  static constexpr std::array<std::pair<double, double>, 4> kPoints = {
      {{0.3, 0.2}, {0.3, -0.4}, {-0.25, 0.45}, {0.45, -0.35}}};
  PfaffSet() { slots_ = {{"param", 4}, {"point", 4}}; }
  bool check(const std::vector<i64>& t) override {
    const RatParams& pr = param_sets()[t[0]];
    const auto [x, y] = kPoints[t[1]];
    const cplx lhs = eval2(pr.ad(), pr.b1d(), pr.b2d(), pr.cd(), x, y);
    const cplx rhs = std::pow(1 - x, -pr.b1d()) * std::pow(1 - y, -pr.b2d()) *
                     eval2(pr.cd() - pr.ad(), pr.b1d(), pr.b2d(), pr.cd(),
                           x / (x - 1), y / (y - 1));
    return std::abs(lhs - rhs) <= kTol;
  }
};

struct EulerSet : ClassicalCaseSet {
  static constexpr std::array<std::pair<double, double>, 4> kPoints = {
      {{0.3, 0.2}, {0.1, -0.3}, {0.45, 0.3}, {0.2, -0.5}}};
  EulerSet() { slots_ = {{"param", 4}, {"point", 4}}; }
  bool check(const std::vector<i64>& t) override {
    const RatParams& pr = param_sets()[t[0]];
    const auto [x, y] = kPoints[t[1]];
    const cplx lhs = eval2(pr.ad(), pr.b1d(), pr.b2d(), pr.cd(), x, y);
    const cplx rhs =
        std::pow(1 - x, pr.cd() - pr.ad() - pr.b1d()) * std::pow(1 - y, -pr.b2d()) *
        eval2(pr.cd() - pr.ad(), pr.cd() - pr.b1d() - pr.b2d(), pr.b2d(), pr.cd(),
              x, (x - y) / (1 - y));
    return std::abs(lhs - rhs) <= kTol;
  }
};

/// Cases 0..8 check the diagonal coefficient collapse exactly at each total
/// degree; cases 9..11 check the signed-power form numerically.
struct DiagSet : ClassicalCaseSet {
  static constexpr std::array<double, 3> kPoints = {0.3, -0.4, 0.6};
  DiagSet() { slots_ = {{"param", 4}, {"case", 12}}; }
  bool check(const std::vector<i64>& t) override {
    const RatParams& pr = param_sets()[t[0]];
    if (t[1] <= 8) {
      const i64 d = t[1];
      SeriesParams two{pr.a, {pr.b1, pr.b2}, pr.c};
      SeriesParams one{pr.a, {pr.b1 + pr.b2}, pr.c};
      Rational diag(0);
      for (i64 i = 0; i <= d; ++i) {
        const std::array<i64, 2> idx = {i, d - i};
        diag += fdn_coeff(two, idx);
      }
      const std::array<i64, 1> idx1 = {d};
      return diag == fdn_coeff(one, idx1);
    }
    const double x = kPoints[t[1] - 9];
    const cplx lhs = eval2(pr.ad(), pr.b1d(), pr.b2d(), pr.cd(), x, x);
    const cplx rhs = std::pow(1 - x, pr.cd() - pr.ad() - pr.b1d() - pr.b2d()) *
                     eval1(pr.cd() - pr.ad(), pr.cd() - pr.b1d() - pr.b2d(),
                           pr.cd(), x);
    return std::abs(lhs - rhs) <= kTol;
  }
};

struct KoikeShigaSet : ClassicalCaseSet {
  static constexpr std::array<std::pair<double, double>, 4> kPoints = {
      {{0.9, 0.95}, {0.5, 0.7}, {0.8, 0.6}, {0.7, 0.3}}};
  KoikeShigaSet() { slots_ = {{"point", 4}}; }
  bool check(const std::vector<i64>& t) override {
    const auto [x, y] = kPoints[t[0]];
    const cplx omega = std::polar(1.0, 2.0 * M_PI / 3.0);
    const cplx omega2 = std::conj(omega);
    const double den = 1 + x + y;
    const cplx z1 = (1.0 + omega * x + omega2 * y) / den;
    const cplx z2 = (1.0 + omega2 * x + omega * y) / den;
    const double third = 1.0 / 3.0;
    const cplx lhs = eval2(third, third, third, 1.0, 1 - x * x * x, 1 - y * y * y);
    const cplx rhs =
        3.0 / den * eval2(third, third, third, 1.0, z1 * z1 * z1, z2 * z2 * z2);
    return std::abs(lhs - rhs) <= kTol;
  }
};

struct BorweinSet : ClassicalCaseSet {
  static constexpr std::array<double, 3> kPoints = {0.3, 0.5, 0.8};
  BorweinSet() { slots_ = {{"point", 3}}; }
  bool check(const std::vector<i64>& t) override {
    const double x = kPoints[t[0]];
    const double r = (1 - x) / (1 + 2 * x);
    const cplx lhs = eval1(1.0 / 3.0, 2.0 / 3.0, 1.0, 1 - x * x * x);
    const cplx rhs = 3.0 / (1 + 2 * x) * eval1(1.0 / 3.0, 2.0 / 3.0, 1.0, r * r * r);
    return std::abs(lhs - rhs) <= kTol;
  }
};

}  // namespace

std::unique_ptr<CaseSet> make_classical_case_set(IdentityId id, i64) {
  switch (id) {
    case IdentityId::ClassicalPfaff: return std::make_unique<PfaffSet>();
    case IdentityId::ClassicalEuler: return std::make_unique<EulerSet>();
    case IdentityId::ClassicalDiag: return std::make_unique<DiagSet>();
    case IdentityId::KoikeShiga: return std::make_unique<KoikeShigaSet>();
    case IdentityId::Borwein: return std::make_unique<BorweinSet>();
    default: throw std::logic_error("identity is not classical");
  }
}

}  // namespace applf::verify_detail
