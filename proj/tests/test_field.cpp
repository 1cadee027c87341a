#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "applf/errors.hpp"
#include "applf/field.hpp"
#include "doctest.h"

using namespace applf;

namespace {

// Brute-force multiplicative order, as an oracle for generator choice.
i64 order_of(i64 a, i64 p) {
  i64 v = a % p, ord = 1;
  while (v != 1) {
    v = v * a % p;
    ++ord;
  }
  return ord;
}

}  // namespace

TEST_CASE("make_field picks the smallest primitive root") {
  PrimeField f7(7);
  CHECK(f7.generator() == 3);
  CHECK(order_of(2, 7) == 3);  // the rejected candidate has order 3
  CHECK(order_of(3, 7) == 6);

  PrimeField f3(3);
  CHECK(f3.generator() == 2);

  for (i64 p : {5, 11, 13, 31}) {
    PrimeField f(p);
    CHECK(order_of(f.generator(), p) == p - 1);
    for (i64 g = 2; g < f.generator(); ++g) CHECK(order_of(g, p) < p - 1);
  }
}

TEST_CASE("make_field rejects non-primes and even numbers") {
  CHECK_THROWS_WITH_AS(PrimeField(9), "9 is not an odd prime", Error);
  CHECK_THROWS_AS(PrimeField(2), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(15), Error);
  try {
    PrimeField(9);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnOddPrime);
  }
}

TEST_CASE("discrete logs invert exponentiation") {
  PrimeField f(7);
  CHECK(f.dlog(1) == 0);
  CHECK(f.dlog(3) == 1);
  CHECK(f.dlog(6) == 3);  // 3^3 = 27 = 6 mod 7
  CHECK_THROWS_AS(f.dlog(0), Error);

  for (i64 p : {7, 31}) {
    PrimeField g(p);
    for (i64 a = 1; a < p; ++a) CHECK(g.pow(g.generator(), g.dlog(a)) == a);
  }
}

TEST_CASE("character construction and order") {
  PrimeField f(7);
  CHECK(char_of_order(f, 3).exponent() == 2);
  CHECK(char_of_order(f, 1).is_trivial());
  CHECK_THROWS_AS(char_of_order(f, 4), Error);
  CHECK(Character(f, 0).is_trivial());
  CHECK(Character(f, 2).order() == 3);
  CHECK(Character(f, -1) == Character(f, 5));
  CHECK(Character(f, 2).conj() == Character(f, 4));
}

TEST_CASE("character evaluation") {
  PrimeField f(7);
  Character eps(f, 0);
  Character eta3(f, 2);
  CHECK(eps.eval(5) == CycValue::integer(1));
  CHECK(eta3.eval(0).is_zero());
  CHECK(eps.eval(0).is_zero());
  CHECK(eta3.eval(3) == CycValue::root_power(3, 1));
  CHECK(eta3.eval(3).level() == 3);  // value lives at the order of the character
}

TEST_CASE("delta indicators") {
  PrimeField f(7);
  CHECK(delta(Character(f, 0)) == 1);
  CHECK(delta(Character(f, 2)) == 0);
  CHECK(delta(f, 0) == 1);
  CHECK(delta(f, 7) == 1);
  CHECK(delta(f, 3) == 0);
}

TEST_CASE("characters are multiplicative") {
  for (i64 p : {7, 31}) {
    PrimeField f(p);
    for (i64 m = 0; m < p - 1; ++m) {
      Character chi(f, m);
      for (i64 a = 1; a < p; ++a)
        for (i64 b = a; b < p; ++b)
          CHECK(chi.eval(f.mul(a, b)) == chi.eval(a) * chi.eval(b));
    }
  }
}

TEST_CASE("orthogonality over the field and over the dual") {
  for (i64 p : {7, 11, 13}) {
    PrimeField f(p);
    for (i64 ma = 0; ma < p - 1; ++ma)
      for (i64 mb = 0; mb < p - 1; ++mb) {
        CycValue sum;
        Character a(f, ma), b(f, mb);
        for (i64 x = 0; x < p; ++x) sum += a.eval(x) * b.eval(x);
        const i64 expect = (ma + mb) % (p - 1) == 0 ? p - 1 : 0;
        CHECK(sum == CycValue::integer(expect));
      }
    for (i64 x = 0; x < p; ++x) {
      CycValue sum;
      for (i64 m = 0; m < p - 1; ++m) sum += Character(f, m).eval(x);
      CHECK(sum == CycValue::integer(x == 1 ? p - 1 : 0));
    }
  }
}

TEST_CASE("minimal-level evaluation embeds coherently") {
  for (i64 p : {7, 13}) {
    PrimeField f(p);
    for (i64 m = 0; m < p - 1; ++m) {
      Character chi(f, m);
      for (i64 a = 1; a < p; ++a) {
        CycValue direct = CycValue::root_power(p - 1, m * f.dlog(a) % (p - 1));
        CHECK(chi.eval(a).embedded(p - 1) == direct);
      }
    }
  }
}

TEST_CASE("field mismatch is rejected") {
  PrimeField f7(7), f11(11);
  CHECK_THROWS_AS(Character(f7, 1) * Character(f11, 1), Error);
}
