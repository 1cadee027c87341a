#pragma once

#include <span>
#include <vector>

#include "applf/field.hpp"

namespace applf {

/// Exponent data of a generalized Picard curve
///   y^N = x^i (1-x)^j (1 - lambda_1 x)^{k_1} ... (1 - lambda_n x)^{k_n}.
struct CurveSpec {
  i64 N = 0;
  i64 i = 0;
  i64 j = 0;
  std::vector<i64> ks;

  i64 n() const { return static_cast<i64>(ks.size()); }
  void validate() const;  // PreconditionViolated
};

struct CurveInstance {
  CurveSpec spec;
  std::vector<i64> lambdas;
  const PrimeField* field = nullptr;
};

/// Genus of the smooth model of y^N = prod (x - lambda_k)^{A_k} with r+1
/// distinct finite branch points; requires gcd(N, A_0..A_r) = 1 and
/// N != sum A_k.
i64 genus_xn(i64 n_cover, std::span<const i64> as);
i64 euler_characteristic_xn(i64 n_cover, std::span<const i64> as);

/// Genus of the smooth model of the generalized Picard curve, from the
/// closed-form gcd expression; agrees with genus_xn on the isomorphic model.
i64 genus_picard(const CurveSpec& spec);

/// #{x in F_p : x^n = a} for a != 0 and n | p-1, computed as the character
/// sum over all characters of order dividing n.
i64 nth_power_count(const PrimeField& f, i64 a, i64 n);

/// Point count 1 + p + sum over m of period values; requires p = 1 mod N.
/// The single point at infinity contributes exactly 1.
i64 count_points_formula(const CurveInstance& inst);

/// Exhaustive affine enumeration plus one point at infinity; no smoothness
/// or congruence assumptions.
i64 count_points_naive(const CurveInstance& inst);

/// 1 + p - #C(F_p), via the formula when p = 1 mod N and the naive count
/// otherwise.
i64 trace_of_frobenius(const CurveInstance& inst);

namespace detail {
/// Formula count with an explicit primitive N-th order character; used to
/// check independence of the character choice.
i64 count_points_formula_with(const CurveInstance& inst, const Character& eta);
}  // namespace detail

}  // namespace applf
