#pragma once

#include <vector>

#include "applf/cyclotomic.hpp"
#include "applf/field.hpp"

namespace applf {

/// Parameters of an n-variable period / hypergeometric function:
/// top character A, row B_1..B_n, bottom character C, arguments lambda_1..n.
struct AppellParams {
  Character a;
  std::vector<Character> bs;
  Character c;
  std::vector<i64> lambdas;

  i64 n() const { return static_cast<i64>(bs.size()); }
  const PrimeField& field() const { return a.field(); }
  void validate() const;  // FieldMismatch / DomainError
};

/// The period sum over y in F_p of
///   A(y) (C conj A)(1-y) conj(B_1)(1 - lambda_1 y) ... conj(B_n)(1 - lambda_n y),
/// exact at level lcm of the character orders.  Any lambda values are
/// accepted, including 0, 1 and repeats.
CycValue pdn(const AppellParams& params);

/// Period sum normalized by its all-lambda-zero value J(A, C conj A).
CycFraction fdn(const AppellParams& params);

/// One-variable period with the classical parameter order:
/// pp1(A,B,C,lambda) is the n = 1 period of (B; A; C).
CycValue pp1(const Character& a, const Character& b, const Character& c, i64 lambda);

/// pp1 normalized by J(B, C conj B); symmetric in A and B for primitive
/// parameters.
CycFraction ff2f1(const Character& a, const Character& b, const Character& c, i64 lambda);

/// The same period value computed through the (q-1)^n-term Jacobi-sum
/// expansion; a verification target, never the default evaluator.
/// For n >= 2 all lambda_i must be nonzero (DomainError); the n = 1 branch
/// includes the delta(lambda) correction and is valid everywhere.
CycValue pdn_via_jacobi(const AppellParams& params);

/// A, B_i != epsilon and A, B_i != C.
bool is_primitive(const AppellParams& params);

}  // namespace applf
