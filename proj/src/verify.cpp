#include "applf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <atomic>
#include <cctype>
#include <random>
#include <stdexcept>
#include <thread>

#include "applf/errors.hpp"
#include "verify_internal.hpp"

namespace applf {

namespace {

struct IdentityInfo {
  IdentityId id;
  const char* name;
  const char* description;
  int residue_mod3;  // 1 if the identity needs p = 1 mod 3, else 0
  bool needs_prime;  // false for the purely classical (numeric) identities
};

const IdentityInfo kIdentities[] = {
    {IdentityId::BinomThm, "binom-thm",
     "expansion of A(1-x) as a Jacobi-sum weighted character sum", 0, true},
    {IdentityId::AltBinom, "alt-binom",
     "expansion of conj(B)(x) (conj(A)B)(1-x) through Jacobi sums", 0, true},
    {IdentityId::Jacobi1, "jacobi-1",
     "J(A, conj B) = A(-1) J(A, B conj A)", 0, true},
    {IdentityId::Jacobi2, "jacobi-2",
     "J(A, conj B) = B(-1) J(B conj A, conj B)", 0, true},
    {IdentityId::Jacobi3, "jacobi-3",
     "binom(A, B) = AB(-1) binom(conj B, conj A)", 0, true},
    {IdentityId::Jacobi4, "jacobi-4",
     "three-character Jacobi product relation with delta corrections", 0, true},
    {IdentityId::PdJacobiN1, "pd-jacobi-n1",
     "one-variable period as a Jacobi-sum single sum", 0, true},
    {IdentityId::PdJacobiN2, "pd-jacobi-n2",
     "two-variable period as a Jacobi-sum double sum (nonzero arguments)", 0, true},
    {IdentityId::PdJacobiCor, "pd-jacobi-cor",
     "two-variable period double sum with all delta corrections", 0, true},
    {IdentityId::P2Trans1, "p2-trans-1",
     "one-variable period transformation under conjugating the bottom character", 0, true},
    {IdentityId::P2Trans2, "p2-trans-2",
     "one-variable period transformation under lambda -> 1/lambda", 0, true},
    {IdentityId::P2Trans3, "p2-trans-3",
     "one-variable period transformation under lambda -> 1 - lambda", 0, true},
    {IdentityId::PdOneMinus, "pd-one-minus",
     "two-variable period under all lambda_i -> 1 - lambda_i", 0, true},
    {IdentityId::FdOneMinus, "fd-one-minus",
     "normalized two-variable function under all lambda_i -> 1 - lambda_i", 0, true},
    {IdentityId::PdInv1, "pd-inv-1",
     "one-variable period under lambda -> 1/lambda", 0, true},
    {IdentityId::PdInv2, "pd-inv-2",
     "two-variable period under lambda_i -> 1/lambda_i", 0, true},
    {IdentityId::PdPfaff1, "pd-pfaff-1",
     "one-variable period under lambda -> lambda/(lambda-1), both printed forms", 0, true},
    {IdentityId::PdPfaff2, "pd-pfaff-2",
     "two-variable period under lambda_i -> lambda_i/(lambda_i-1)", 0, true},
    {IdentityId::P2Euler, "p2-euler",
     "one-variable period under conjugating both top characters", 0, true},
    {IdentityId::P2Symm1, "p2-symm-1",
     "symmetry of the normalized one-variable function in its top characters", 0, true},
    {IdentityId::P2Symm2, "p2-symm-2",
     "conjugation symmetry of the one-variable period and function", 0, true},
    {IdentityId::DiagReduce, "diag-reduce",
     "two-variable period on the diagonal reduces to one variable", 0, true},
    {IdentityId::PdReduce1, "pd-reduce-1",
     "two-variable reduction when the first row character is trivial", 0, true},
    {IdentityId::PdReduce2, "pd-reduce-2",
     "two-variable reduction when the bottom character equals the top", 0, true},
    {IdentityId::PdReduce3, "pd-reduce-3",
     "two-variable reduction for a conjugate row pair, both printed readings", 0, true},
    {IdentityId::PdReduce4, "pd-reduce-4",
     "two-variable reduction when the top character is trivial", 0, true},
    {IdentityId::CubicF1, "cubic-f1",
     "cubic argument transformation of the two-variable cubic-character function", 1, true},
    {IdentityId::Cubic2F1, "cubic-2f1",
     "cubic argument transformation of the one-variable cubic-character function", 1, true},
    {IdentityId::PointCount, "pointcount",
     "period point-count formula against exhaustive enumeration", 0, true},
    {IdentityId::HasseCong, "hasse-cong",
     "Hasse invariant equals the signed truncated series mod p", 1, true},
    {IdentityId::TraceEqual, "trace-equal",
     "the two cubic curves attached to a zeta pair share their trace", 1, true},
    {IdentityId::ClassicalPfaff, "classical-pfaff",
     "numeric two-variable series transformation x -> x/(x-1)", 0, false},
    {IdentityId::ClassicalEuler, "classical-euler",
     "numeric two-variable series transformation with rebalanced parameters", 0, false},
    {IdentityId::ClassicalDiag, "classical-diag",
     "diagonal series collapse, exact termwise and numeric", 0, false},
    {IdentityId::KoikeShiga, "koike-shiga",
     "numeric cubic transformation of the two-variable series", 0, false},
    {IdentityId::Borwein, "borwein",
     "numeric cubic transformation of the one-variable series", 0, false},
};

const IdentityInfo& info(IdentityId id) {
  for (const auto& entry : kIdentities)
    if (entry.id == id) return entry;
  throw std::logic_error("identity missing from registry table");
}

std::string canonical_name(std::string s) {
  for (char& ch : s) {
    if (ch == '_') ch = '-';
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return s;
}

}  // namespace

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& entry : kIdentities) v.push_back(entry.id);
    return v;
  }();
  return ids;
}

const char* identity_name(IdentityId id) { return info(id).name; }

const char* identity_description(IdentityId id) { return info(id).description; }

IdentityId identity_from_name(const std::string& name) {
  const std::string wanted = canonical_name(name);
  for (const auto& entry : kIdentities)
    if (wanted == entry.name) return entry.id;
  fail(ErrorCode::UnknownIdentity, "unknown identity: " + name);
}

bool identity_compatible(IdentityId id, i64 p, std::string* why) {
  const IdentityInfo& entry = info(id);
  if (entry.needs_prime && p < 3) {
    if (why) *why = "needs an odd prime";
    return false;
  }
  if (entry.residue_mod3 == 1 && p % 3 != 1) {
    if (why) *why = "requires p = 1 (mod 3)";
    return false;
  }
  return true;
}

namespace verify_detail {

void Reporter::fail(const std::vector<i64>& tuple) {
  ++checked_;
  ++failed_;
  if (failures_.size() >= kMaxStoredFailures) return;
  Counterexample ce;
  for (std::size_t i = 0; i < names_.size() && i < tuple.size(); ++i)
    ce.values.emplace_back(names_[i], tuple[i]);
  failures_.push_back(std::move(ce));
}

std::uint64_t CaseSet::domain_size() const {
  std::uint64_t total = 1;
  for (const Slot& s : slots()) total *= static_cast<std::uint64_t>(s.size);
  return total;
}

void CaseSet::decode(std::uint64_t index, std::vector<i64>& tuple) const {
  const auto& ss = slots();
  tuple.resize(ss.size());
  for (std::size_t i = 0; i < ss.size(); ++i) {
    tuple[i] = static_cast<i64>(index % static_cast<std::uint64_t>(ss[i].size));
    index /= static_cast<std::uint64_t>(ss[i].size);
  }
}

void CaseSet::run_bulk(Reporter&) {
  throw std::logic_error("case set has no bulk path");
}

std::vector<std::string> CaseSet::slot_names() const {
  std::vector<std::string> names;
  for (const Slot& s : slots()) names.push_back(s.name);
  return names;
}

std::unique_ptr<CaseSet> make_case_set(IdentityId id, i64 p) {
  switch (id) {
    case IdentityId::ClassicalPfaff:
    case IdentityId::ClassicalEuler:
    case IdentityId::ClassicalDiag:
    case IdentityId::KoikeShiga:
    case IdentityId::Borwein:
      return make_classical_case_set(id, p);
    default:
      return make_field_case_set(id, p);
  }
}

VerificationReport run_case_set(IdentityId id, i64 p, CaseSet& cs, const Mode& mode) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t domain = cs.domain_size();
  bool exhaustive;
  switch (mode.kind) {
    case Mode::Kind::Exhaustive:
      exhaustive = true;
      break;
    case Mode::Kind::Sampled:
      exhaustive = false;
      break;
    case Mode::Kind::Auto:
    default:
      exhaustive = domain <= kExhaustiveThreshold;
      break;
  }

  Reporter rep(cs.slot_names());
  std::vector<i64> tuple;
  if (exhaustive) {
    if (cs.has_bulk_exhaustive()) {
      cs.run_bulk(rep);
    } else {
      for (std::uint64_t idx = 0; idx < domain; ++idx) {
        cs.decode(idx, tuple);
        if (!cs.admissible(tuple)) continue;
        if (cs.check(tuple))
          rep.pass();
        else
          rep.fail(tuple);
      }
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, domain - 1);
    for (std::uint64_t s = 0; s < mode.samples; ++s) {
      cs.decode(dist(rng), tuple);
      if (!cs.admissible(tuple)) continue;
      if (cs.check(tuple))
        rep.pass();
      else
        rep.fail(tuple);
    }
  }

  VerificationReport report;
  report.id = id;
  report.prime = p;
  report.exhaustive = exhaustive;
  if (!exhaustive) {
    report.seed = mode.seed;
    report.samples_requested = mode.samples;
  }
  report.cases_checked = rep.checked();
  report.failure_count = rep.failed();
  report.failures = rep.take_failures();
  report.note = cs.note();
  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  if (report.cases_checked == 0)
    throw std::logic_error("verification visited no admissible cases");
  return report;
}

}  // namespace verify_detail

VerificationReport verify_identity(IdentityId id, i64 p, const Mode& mode) {
  std::string why;
  if (!identity_compatible(id, p, &why))
    fail(ErrorCode::IncompatiblePrime,
         std::string(identity_name(id)) + " at p = " + std::to_string(p) + ": " + why);
  auto cs = verify_detail::make_case_set(id, p);
  return verify_detail::run_case_set(id, p, *cs, mode);
}

std::vector<SweepEntry> sweep(IdentityId id, i64 lo, i64 hi, const Mode& mode) {
  if (lo > hi) fail(ErrorCode::EmptyRange, "empty prime range");
  std::vector<i64> primes;
  for (i64 p = std::max<i64>(lo, 3); p <= hi; ++p)
    if (p % 2 == 1 && is_prime(p)) primes.push_back(p);

  std::vector<SweepEntry> out(primes.size());
  std::vector<std::future<void>> jobs;
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= primes.size()) return;
      SweepEntry& entry = out[i];
      entry.prime = primes[i];
      std::string why;
      if (!identity_compatible(id, primes[i], &why)) {
        entry.skipped = true;
        entry.skip_reason = why;
        continue;
      }
      entry.report = verify_identity(id, primes[i], mode);
    }
  };
  jobs.reserve(workers);
  for (unsigned w = 0; w + 1 < workers && w + 1 < primes.size(); ++w)
    jobs.push_back(std::async(std::launch::async, worker));
  worker();
  for (auto& j : jobs) j.get();
  return out;
}

bool recheck_case(IdentityId id, i64 p, const Counterexample& c) {
  auto cs = verify_detail::make_case_set(id, p);
  const auto names = cs->slot_names();
  std::vector<i64> tuple(names.size(), 0);
  for (std::size_t i = 0; i < names.size(); ++i) {
    bool found = false;
    for (const auto& [name, value] : c.values)
      if (name == names[i]) {
        tuple[i] = value;
        found = true;
        break;
      }
    if (!found)
      fail(ErrorCode::DomainError, "counterexample missing slot " + names[i]);
  }
  if (!cs->admissible(tuple))
    fail(ErrorCode::DomainError, "counterexample tuple outside identity domain");
  return cs->check(tuple);
}

}  // namespace applf
