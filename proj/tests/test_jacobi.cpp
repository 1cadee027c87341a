#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "applf/errors.hpp"
#include "applf/jacobi.hpp"
#include "doctest.h"

using namespace applf;

namespace {

// Literal oracle for J(A,B): multiply exact character values term by term,
// independent of the exponent-bucket path used in jacobi_sum.
CycValue jacobi_oracle(const Character& a, const Character& b) {
  const PrimeField& f = a.field();
  CycValue sum;
  for (i64 x = 0; x < f.p(); ++x) sum += a.eval(x) * b.eval(1 - x);
  return sum;
}

}  // namespace

TEST_CASE("trivial-character Jacobi sums count points") {
  for (i64 p : {7, 11, 13}) {
    PrimeField f(p);
    Character eps(f, 0);
    CHECK(jacobi_sum(eps, eps) == CycValue::integer(p - 2));
    for (i64 m = 1; m < p - 1; ++m) {
      CHECK(jacobi_sum(Character(f, m), eps) == CycValue::integer(-1));
      CHECK(jacobi_sum(eps, Character(f, m)) == CycValue::integer(-1));
    }
  }
}

TEST_CASE("quadratic Jacobi sum at p = 7") {
  PrimeField f(7);
  Character eta2(f, 3);
  CHECK(jacobi_sum(eta2, eta2) == CycValue::integer(1));
  CHECK(jacobi_sum(eta2, eta2) == jacobi_oracle(eta2, eta2));
  // J(A, conj A) = -A(-1) for nontrivial A
  for (i64 m = 1; m < 6; ++m) {
    Character a(f, m);
    CHECK(jacobi_sum(a, a.conj()) == CycValue::integer(-a.at_minus_one()));
  }
}

TEST_CASE("jacobi_sum agrees with the term-by-term oracle") {
  for (i64 p : {7, 11}) {
    PrimeField f(p);
    for (i64 ma = 0; ma < p - 1; ++ma)
      for (i64 mb = 0; mb < p - 1; ++mb) {
        Character a(f, ma), b(f, mb);
        CHECK(jacobi_sum(a, b) == jacobi_oracle(a, b));
      }
  }
}

TEST_CASE("Jacobi sums never vanish") {
  for (i64 p : {7, 11, 13}) {
    PrimeField f(p);
    for (i64 ma = 0; ma < p - 1; ++ma)
      for (i64 mb = 0; mb < p - 1; ++mb)
        CHECK_FALSE(jacobi_sum(Character(f, ma), Character(f, mb)).is_zero());
  }
}

TEST_CASE("binomial values") {
  PrimeField f(7);
  Character eps(f, 0), eta2(f, 3);
  CHECK(ff_binom(eps, eps) == CycValue::integer(-(7 - 2)));
  for (i64 m = 1; m < 6; ++m)
    CHECK(ff_binom(Character(f, m), eps) == CycValue::integer(1));
  CHECK(ff_binom(eta2, eta2) == CycValue::integer(1));
}

TEST_CASE("binomial reflection identity at p = 7") {
  PrimeField f(7);
  for (i64 ma = 0; ma < 6; ++ma)
    for (i64 mb = 0; mb < 6; ++mb) {
      Character a(f, ma), b(f, mb);
      CycValue lhs = ff_binom(a, b);
      CycValue rhs = ff_binom(b.conj(), a.conj()) * ((a * b).at_minus_one());
      CHECK(lhs == rhs);
    }
}

TEST_CASE("mixed fields are rejected") {
  PrimeField f7(7), f11(11);
  CHECK_THROWS_AS(jacobi_sum(Character(f7, 1), Character(f11, 1)), Error);
}
