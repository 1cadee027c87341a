#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "applf/cyclotomic.hpp"

namespace applf {

/// Every verifiable identity, one entry per statement in the registry.
enum class IdentityId : int {
  BinomThm,
  AltBinom,
  Jacobi1,
  Jacobi2,
  Jacobi3,
  Jacobi4,
  PdJacobiN1,
  PdJacobiN2,
  PdJacobiCor,
  P2Trans1,
  P2Trans2,
  P2Trans3,
  PdOneMinus,
  FdOneMinus,
  PdInv1,
  PdInv2,
  PdPfaff1,
  PdPfaff2,
  P2Euler,
  P2Symm1,
  P2Symm2,
  DiagReduce,
  PdReduce1,
  PdReduce2,
  PdReduce3,
  PdReduce4,
  CubicF1,
  Cubic2F1,
  PointCount,
  HasseCong,
  TraceEqual,
  ClassicalPfaff,
  ClassicalEuler,
  ClassicalDiag,
  KoikeShiga,
  Borwein,
};

inline constexpr std::uint64_t kDefaultSampleSeed = 12345;
inline constexpr std::uint64_t kDefaultSampleCount = 100000;
/// Domains larger than this are sampled unless exhaustive mode is forced.
inline constexpr std::uint64_t kExhaustiveThreshold = 1000000;
inline constexpr std::size_t kMaxStoredFailures = 25;

struct Mode {
  enum class Kind { Auto, Exhaustive, Sampled };
  Kind kind = Kind::Auto;
  std::uint64_t seed = kDefaultSampleSeed;
  std::uint64_t samples = kDefaultSampleCount;

  static Mode exhaustive() { return Mode{Kind::Exhaustive, 0, 0}; }
  static Mode sampled(std::uint64_t seed = kDefaultSampleSeed,
                      std::uint64_t samples = kDefaultSampleCount) {
    return Mode{Kind::Sampled, seed, samples};
  }
};

/// One failing parameter tuple, named slot by slot; feeding it back through
/// recheck_case reproduces the inequality.
struct Counterexample {
  std::vector<std::pair<std::string, i64>> values;
};

struct VerificationReport {
  IdentityId id;
  i64 prime = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;               // sampled mode only
  std::uint64_t samples_requested = 0;  // sampled mode only
  std::uint64_t cases_checked = 0;
  std::uint64_t failure_count = 0;
  std::vector<Counterexample> failures;  // at most kMaxStoredFailures kept
  std::string note;
  std::chrono::microseconds elapsed{0};

  bool pass() const { return failure_count == 0; }
};

struct SweepEntry {
  i64 prime = 0;
  bool skipped = false;
  std::string skip_reason;
  std::optional<VerificationReport> report;
};

const std::vector<IdentityId>& all_identities();
const char* identity_name(IdentityId id);
/// What the identity asserts, in plain words.
const char* identity_description(IdentityId id);
IdentityId identity_from_name(const std::string& name);  // UnknownIdentity
bool identity_compatible(IdentityId id, i64 p, std::string* why = nullptr);

/// Quantify the identity over its full parameter domain at prime p.
/// IncompatiblePrime if p fails the identity's congruence requirements.
VerificationReport verify_identity(IdentityId id, i64 p, const Mode& mode = {});

/// One report per prime in [lo, hi]; incompatible primes produce skip
/// entries, composites are not visited.  EmptyRange if lo > hi.
std::vector<SweepEntry> sweep(IdentityId id, i64 lo, i64 hi, const Mode& mode = {});

/// Standalone re-evaluation of a reported counterexample.
bool recheck_case(IdentityId id, i64 p, const Counterexample& c);

}  // namespace applf
