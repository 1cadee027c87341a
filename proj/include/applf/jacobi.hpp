#pragma once

#include "applf/cyclotomic.hpp"
#include "applf/field.hpp"

namespace applf {

/// J(A,B) = sum over x in F_p of A(x) B(1-x), exact in Z[zeta_L] where
/// L = lcm(ord A, ord B).  Never zero over a prime field; an internal check
/// enforces this, which is what justifies using Jacobi sums as denominators.
CycValue jacobi_sum(const Character& a, const Character& b);

/// Character-sum binomial coefficient: binom(A, chi) = -chi(-1) J(A, conj chi).
CycValue ff_binom(const Character& a, const Character& chi);

}  // namespace applf
