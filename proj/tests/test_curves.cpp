#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numeric>

#include "applf/curves.hpp"
#include "applf/errors.hpp"
#include "doctest.h"

using namespace applf;

namespace {

i64 brute_nth_power_count(const PrimeField& f, i64 a, i64 n) {
  i64 count = 0;
  for (i64 x = 0; x < f.p(); ++x)
    if (f.pow(x, n) == f.reduce(a)) ++count;
  return count;
}

}  // namespace

TEST_CASE("genus of branched covers") {
  CHECK(genus_xn(2, std::vector<i64>{1, 1, 1}) == 1);   // elliptic
  CHECK(genus_xn(3, std::vector<i64>{2, 1, 1, 1}) == 3);
  CHECK(euler_characteristic_xn(3, std::vector<i64>{2, 1, 1, 1}) == -4);
  CHECK_THROWS_AS(genus_xn(2, std::vector<i64>{1, 1}), Error);   // N = sum
  CHECK_THROWS_AS(genus_xn(4, std::vector<i64>{2, 2}), Error);   // gcd > 1
}

TEST_CASE("genus of the generalized Picard model") {
  CHECK(genus_picard(CurveSpec{3, 2, 1, {1, 1}}) == 3);
  CHECK(genus_picard(CurveSpec{2, 1, 1, {1}}) == 1);
  CHECK_THROWS_AS(genus_picard(CurveSpec{3, 3, 3, {3}}), Error);
  CHECK_THROWS_AS(genus_picard(CurveSpec{2, 1, 1, {2}}), Error);  // N | sum
}

TEST_CASE("the two genus routes agree on the isomorphic model") {
  for (i64 N = 2; N <= 6; ++N)
    for (i64 i = 1; i <= 4; ++i)
      for (i64 j = 1; j <= 4; ++j)
        for (i64 k1 = 1; k1 <= 4; ++k1) {
          CurveSpec one{N, i, j, {k1}};
          try {
            one.validate();
            CHECK(genus_picard(one) == genus_xn(N, std::vector<i64>{i, j, k1}));
          } catch (const Error&) {
          }
          for (i64 k2 = 1; k2 <= 4; ++k2) {
            CurveSpec spec{N, i, j, {k1, k2}};
            try {
              spec.validate();
            } catch (const Error&) {
              continue;
            }
            CHECK(genus_picard(spec) ==
                  genus_xn(N, std::vector<i64>{i, j, k1, k2}));
          }
        }
}

TEST_CASE("n-th power counts through character sums") {
  PrimeField f7(7);
  CHECK(nth_power_count(f7, 2, 2) == 2);  // 3^2 = 4^2 = 2 mod 7
  CHECK(nth_power_count(f7, 3, 2) == 0);  // non-residue
  CHECK(nth_power_count(f7, 1, 1) == 1);
  CHECK_THROWS_AS(nth_power_count(f7, 0, 2), Error);
  CHECK_THROWS_AS(nth_power_count(f7, 2, 4), Error);

  for (i64 p : {7, 13, 31}) {
    PrimeField f(p);
    for (i64 n = 1; n < p; ++n) {
      if ((p - 1) % n != 0) continue;
      for (i64 a = 1; a < p; ++a)
        CHECK(nth_power_count(f, a, n) == brute_nth_power_count(f, a, n));
    }
  }
}

TEST_CASE("point count on the quadratic curve over F_3") {
  PrimeField f(3);
  CurveInstance inst{CurveSpec{2, 1, 1, {1}}, {2}, &f};
  CHECK(count_points_naive(inst) == 4);
  CHECK(count_points_formula(inst) == 4);
  CHECK(trace_of_frobenius(inst) == 0);
}

TEST_CASE("classical genus-3 curve: formula equals enumeration") {
  PrimeField f(7);
  CurveInstance inst{CurveSpec{3, 2, 1, {1, 1}}, {2, 3}, &f};
  CHECK(count_points_formula(inst) == count_points_naive(inst));
}

TEST_CASE("degenerate arguments still enumerate") {
  PrimeField f(3);
  CurveInstance inst{CurveSpec{2, 1, 1, {1}}, {0}, &f};
  const i64 naive = count_points_naive(inst);
  CHECK(naive == count_points_formula(inst));
  CHECK(naive > 0);
}

TEST_CASE("formula requires p = 1 mod N") {
  PrimeField f(7);
  CurveInstance inst{CurveSpec{4, 1, 1, {1}}, {2}, &f};
  CHECK_THROWS_AS(count_points_formula(inst), Error);
  try {
    count_points_formula(inst);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadPrime);
  }
}

TEST_CASE("the count does not depend on the primitive character chosen") {
  for (i64 p : {7, 13}) {
    PrimeField f(p);
    for (i64 N : {2, 3, 4, 6}) {
      if ((p - 1) % N != 0) continue;
      CurveSpec spec{N, 2, 1, {1, 1}};
      try {
        spec.validate();
      } catch (const Error&) {
        continue;
      }
      CurveInstance inst{spec, {2, 3}, &f};
      const i64 reference = count_points_formula(inst);
      for (i64 u = 1; u < N; ++u) {
        if (std::gcd(u, N) != 1) continue;
        Character eta(f, u * (p - 1) / N);
        CHECK(detail::count_points_formula_with(inst, eta) == reference);
      }
    }
  }
}

TEST_CASE("traces respect the Weil bound on smooth genus-3 instances") {
  PrimeField f(7);
  const double bound = 6.0 * std::sqrt(7.0);
  for (i64 l1 = 2; l1 < 7; ++l1)
    for (i64 l2 = 2; l2 < 7; ++l2) {
      if (l1 == l2) continue;
      CurveInstance inst{CurveSpec{3, 2, 1, {1, 1}}, {l1, l2}, &f};
      CHECK(genus_picard(inst.spec) == 3);
      CHECK(std::abs(static_cast<double>(trace_of_frobenius(inst))) <= bound);
    }
}

TEST_CASE("cubic curves over p = 2 mod 3 have trace zero") {
  PrimeField f(5);
  CurveInstance inst{CurveSpec{3, 2, 1, {1, 1}}, {2, 3}, &f};
  CHECK(trace_of_frobenius(inst) == 0);  // naive path, cubing is a bijection
}

TEST_CASE("formula result is an integer for every admissible sweep point") {
  for (i64 p : {7, 13}) {
    PrimeField f(p);
    for (i64 l1 = 0; l1 < p; ++l1)
      for (i64 l2 = 0; l2 < p; ++l2) {
        CurveInstance inst{CurveSpec{3, 2, 1, {1, 1}}, {l1, l2}, &f};
        CHECK(count_points_formula(inst) == count_points_naive(inst));
      }
  }
}
