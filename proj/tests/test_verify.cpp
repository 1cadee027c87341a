#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <sstream>

#include "applf/errors.hpp"
#include "applf/verify.hpp"
#include "applf/verify_detail.hpp"
#include "doctest.h"

using namespace applf;

TEST_CASE("the registry holds exactly the expected identities") {
  const std::vector<std::string> expected = {
      "binom-thm",    "alt-binom",    "jacobi-1",      "jacobi-2",
      "jacobi-3",     "jacobi-4",     "pd-jacobi-n1",  "pd-jacobi-n2",
      "pd-jacobi-cor", "p2-trans-1",  "p2-trans-2",    "p2-trans-3",
      "pd-one-minus", "fd-one-minus", "pd-inv-1",      "pd-inv-2",
      "pd-pfaff-1",   "pd-pfaff-2",   "p2-euler",      "p2-symm-1",
      "p2-symm-2",    "diag-reduce",  "pd-reduce-1",   "pd-reduce-2",
      "pd-reduce-3",  "pd-reduce-4",  "cubic-f1",      "cubic-2f1",
      "pointcount",   "hasse-cong",   "trace-equal",   "classical-pfaff",
      "classical-euler", "classical-diag", "koike-shiga", "borwein",
  };
  const auto& ids = all_identities();
  REQUIRE(ids.size() == expected.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    CHECK(identity_name(ids[i]) == expected[i]);
    CHECK(identity_from_name(expected[i]) == ids[i]);
    CHECK(std::string(identity_description(ids[i])).size() > 0);
  }
  CHECK(identity_from_name("CUBIC_F1") == IdentityId::CubicF1);
  CHECK_THROWS_AS(identity_from_name("no-such-identity"), Error);
}

TEST_CASE("cubic transformation at p = 7: 42 cases, degenerate tuples fail") {
  VerificationReport report =
      verify_identity(IdentityId::CubicF1, 7, Mode::exhaustive());
  CHECK(report.exhaustive);
  CHECK(report.cases_checked == 42);
  // The transformation genuinely fails where an argument pair meets {0,1}
  // (for example lambda = 0, mu = 1 maps to argument pairs (1,0) vs (6,6)
  // whose curves have traces -1 and -2); it holds on the remaining domain.
  CHECK(report.failure_count == 12);
  CHECK(report.note.find("off {0,1}: 0") != std::string::npos);
  for (const auto& ce : report.failures)
    CHECK_FALSE(recheck_case(IdentityId::CubicF1, 7, ce));

  // An explicit clean tuple passes standalone.
  Counterexample clean;
  clean.values = {{"lambda", 5}, {"mu", 5}};
  CHECK(recheck_case(IdentityId::CubicF1, 7, clean));
}

TEST_CASE("diagonal reduction fails exactly on the missing-hypothesis locus") {
  VerificationReport report =
      verify_identity(IdentityId::DiagReduce, 7, Mode::exhaustive());
  CHECK(report.cases_checked == 6300);
  CHECK(report.failure_count == 1200);
  CHECK(report.note.find("elsewhere: 0") != std::string::npos);
  for (const auto& ce : report.failures) {
    i64 ma = 0, m1 = 0, m2 = 0, mc = 0;
    for (const auto& [name, value] : ce.values) {
      if (name == "mA") ma = value;
      if (name == "mB1") m1 = value;
      if (name == "mB2") m2 = value;
      if (name == "mC") mc = value;
    }
    CHECK((ma == mc || (m1 + m2) % 6 == mc));
    CHECK_FALSE(recheck_case(IdentityId::DiagReduce, 7, ce));
  }
}

TEST_CASE("trace comparison fails only at degenerate curve arguments") {
  VerificationReport report =
      verify_identity(IdentityId::TraceEqual, 7, Mode::exhaustive());
  CHECK(report.cases_checked == 42);
  CHECK(report.failure_count == 12);
  CHECK(report.note.find("elsewhere: 0") != std::string::npos);
  CHECK(report.note.find("Weil-bound violations: 0") != std::string::npos);
}

TEST_CASE("incompatible primes are rejected") {
  CHECK_THROWS_AS(verify_identity(IdentityId::CubicF1, 11), Error);
  try {
    verify_identity(IdentityId::CubicF1, 11);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatiblePrime);
  }
}

TEST_CASE("sweep visits primes and records skips") {
  const auto entries = sweep(IdentityId::HasseCong, 7, 50);
  std::set<i64> reported, skipped;
  for (const auto& entry : entries) {
    if (entry.skipped) {
      skipped.insert(entry.prime);
      CHECK_FALSE(entry.skip_reason.empty());
    } else {
      REQUIRE(entry.report.has_value());
      CHECK(entry.report->pass());
      reported.insert(entry.prime);
    }
  }
  CHECK(reported == std::set<i64>{7, 13, 19, 31, 37, 43});
  CHECK(skipped == std::set<i64>{11, 17, 23, 29, 41, 47});
}

TEST_CASE("empty sweep range") {
  CHECK_THROWS_AS(sweep(IdentityId::BinomThm, 10, 9), Error);
}

TEST_CASE("sampled runs are deterministic in the seed") {
  const Mode mode = Mode::sampled(987, 400);
  auto a = verify_identity(IdentityId::PdOneMinus, 13, mode);
  auto b = verify_identity(IdentityId::PdOneMinus, 13, mode);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.seed == 987);
  CHECK(a.cases_checked == b.cases_checked);
  CHECK(a.failure_count == b.failure_count);
  CHECK(a.cases_checked > 0);
  CHECK(a.pass());
  auto c = verify_identity(IdentityId::PdOneMinus, 13, Mode::sampled(988, 400));
  CHECK(c.pass());  // different seed, same verdict; case counts may differ
}

TEST_CASE("small exhaustive passes across the registry") {
  for (IdentityId id : {IdentityId::BinomThm, IdentityId::AltBinom,
                        IdentityId::Jacobi1, IdentityId::Jacobi2,
                        IdentityId::Jacobi3, IdentityId::Jacobi4,
                        IdentityId::PdJacobiN1, IdentityId::P2Trans1,
                        IdentityId::P2Trans2, IdentityId::P2Trans3,
                        IdentityId::PdInv1, IdentityId::PdPfaff1,
                        IdentityId::P2Euler, IdentityId::P2Symm1,
                        IdentityId::P2Symm2,
                        IdentityId::PdReduce1, IdentityId::PdReduce2,
                        IdentityId::PdReduce3, IdentityId::PdReduce4,
                        IdentityId::Cubic2F1, IdentityId::HasseCong}) {
    VerificationReport report = verify_identity(id, 7, Mode::exhaustive());
    INFO(identity_name(id));
    CHECK(report.pass());
    CHECK(report.cases_checked > 0);
  }
}

TEST_CASE("binomial expansions hold at the larger table primes") {
  for (i64 p : {11, 13}) {
    CHECK(verify_identity(IdentityId::BinomThm, p, Mode::exhaustive()).pass());
    CHECK(verify_identity(IdentityId::AltBinom, p, Mode::exhaustive()).pass());
  }
}

TEST_CASE("point-count identity passes at p = 7") {
  VerificationReport report =
      verify_identity(IdentityId::PointCount, 7, Mode::exhaustive());
  CHECK(report.pass());
  CHECK(report.cases_checked > 1000);
}

TEST_CASE("sampled mode exercises the per-tuple paths") {
  CHECK(verify_identity(IdentityId::PdJacobiN2, 13, Mode::sampled(5, 200)).pass());
  CHECK(verify_identity(IdentityId::PdJacobiCor, 13, Mode::sampled(5, 200)).pass());
  auto pc = verify_identity(IdentityId::PointCount, 31, Mode::sampled(5, 400));
  CHECK(pc.pass());
  CHECK(pc.cases_checked == 400);
}

TEST_CASE("auto mode samples once the domain passes the threshold") {
  // Six character slots at p = 13 give 12^4 * 13^2 tuples, above the
  // exhaustive threshold.
  auto report = verify_identity(IdentityId::PdOneMinus, 13);
  CHECK_FALSE(report.exhaustive);
  CHECK(report.seed == kDefaultSampleSeed);
  CHECK(report.pass());
  // Small domains stay exhaustive under auto mode.
  CHECK(verify_identity(IdentityId::BinomThm, 13).exhaustive);
}

TEST_CASE("classical identities pass in numeric mode") {
  for (IdentityId id : {IdentityId::ClassicalPfaff, IdentityId::ClassicalEuler,
                        IdentityId::ClassicalDiag, IdentityId::KoikeShiga,
                        IdentityId::Borwein}) {
    VerificationReport report = verify_identity(id, 7);
    INFO(identity_name(id));
    CHECK(report.pass());
  }
}

TEST_CASE("dual-reading reductions record which reading holds") {
  auto r2 = verify_identity(IdentityId::PdReduce2, 7, Mode::exhaustive());
  CHECK(r2.pass());
  CHECK_FALSE(r2.note.empty());
  auto r3 = verify_identity(IdentityId::PdReduce3, 7, Mode::exhaustive());
  CHECK(r3.pass());
  CHECK(r3.note.find("readings") != std::string::npos);
}

namespace {

/// Synthetic case set used to exercise the runner: fails exactly when the
/// two slots are equal.
struct ToyCaseSet : verify_detail::CaseSet {
  std::vector<verify_detail::Slot> slots_{{"x", 5}, {"y", 5}};
  const std::vector<verify_detail::Slot>& slots() const override { return slots_; }
  bool check(const std::vector<i64>& t) override { return t[0] != t[1]; }
};

}  // namespace

TEST_CASE("runner mechanics: counting, counterexamples, reproduction") {
  ToyCaseSet toy;
  VerificationReport report = verify_detail::run_case_set(
      IdentityId::BinomThm, 7, toy, Mode::exhaustive());
  CHECK(report.cases_checked == 25);
  CHECK(report.failure_count == 5);
  CHECK(report.failures.size() == 5);
  for (const auto& ce : report.failures) {
    REQUIRE(ce.values.size() == 2);
    CHECK(ce.values[0].first == "x");
    CHECK(ce.values[0].second == ce.values[1].second);
    // re-evaluating the recorded tuple reproduces the failure
    ToyCaseSet fresh;
    std::vector<i64> tuple{ce.values[0].second, ce.values[1].second};
    CHECK_FALSE(fresh.check(tuple));
  }
}

TEST_CASE("recheck_case rejects tuples outside the identity domain") {
  Counterexample outside;
  outside.values = {{"lambda", 2}, {"mu", 4}};  // 1 + 2 + 4 = 0 mod 7
  CHECK_THROWS_AS(recheck_case(IdentityId::CubicF1, 7, outside), Error);

  Counterexample missing;
  missing.values = {{"lambda", 2}};
  CHECK_THROWS_AS(recheck_case(IdentityId::CubicF1, 7, missing), Error);
}
