#pragma once

#include <memory>

#include "applf/appell.hpp"
#include "applf/field.hpp"
#include "applf/jacobi.hpp"
#include "applf/verify_detail.hpp"

namespace applf::verify_detail {

/// Shared evaluation context for identities over one prime field: the field
/// itself plus Jacobi / binomial / root-of-unity tables at level p-1, built
/// on first use.
struct FieldCtx {
  PrimeField f;
  i64 p;
  i64 n;  // p - 1

  std::vector<std::vector<CycValue>> jt;  // jt[x][y] = J(chi^x, chi^y), level n
  std::vector<std::vector<CycValue>> bt;  // bt[x][y] = binom(chi^x, chi^y)
  std::vector<CycValue> root;             // root[e] = zeta_{p-1}^e

  explicit FieldCtx(i64 prime) : f(prime), p(prime), n(prime - 1) {}

  Character chr(i64 m) const { return Character(f, m); }
  i64 neg_exp(i64 m) const { return (n - m % n) % n; }

  void ensure_tables();

  // Period sums in the (A; B...; C) parameter order.
  CycValue p1(const Character& a, const Character& b, const Character& c, i64 l) const {
    return pdn(AppellParams{a, {b}, c, {l}});
  }
  CycValue p2(const Character& a, const Character& b1, const Character& b2,
              const Character& c, i64 l1, i64 l2) const {
    return pdn(AppellParams{a, {b1, b2}, c, {l1, l2}});
  }
};

std::unique_ptr<CaseSet> make_field_case_set(IdentityId id, i64 p);
std::unique_ptr<CaseSet> make_classical_case_set(IdentityId id, i64 p);

}  // namespace applf::verify_detail
