#pragma once

#include <memory>
#include <string>
#include <vector>

#include "applf/verify.hpp"

namespace applf::verify_detail {

struct Slot {
  std::string name;
  i64 size;  // values range over [0, size)
};

/// Accumulates pass/fail tallies and a capped counterexample list while a
/// case set runs.
class Reporter {
 public:
  explicit Reporter(std::vector<std::string> names) : names_(std::move(names)) {}

  void pass() { ++checked_; }
  void fail(const std::vector<i64>& tuple);

  std::uint64_t checked() const { return checked_; }
  std::uint64_t failed() const { return failed_; }
  std::vector<Counterexample> take_failures() { return std::move(failures_); }

 private:
  std::vector<std::string> names_;
  std::uint64_t checked_ = 0;
  std::uint64_t failed_ = 0;
  std::vector<Counterexample> failures_;
};

/// One identity instantiated at one prime: a parameter domain (product of
/// slots, possibly filtered) plus a per-tuple predicate.  Heavy identities
/// may provide a batched exhaustive path.
class CaseSet {
 public:
  virtual ~CaseSet() = default;

  virtual const std::vector<Slot>& slots() const = 0;
  virtual std::uint64_t domain_size() const;  // default: product of slot sizes
  /// Map a flat index to a tuple; default is mixed-radix over the slots.
  virtual void decode(std::uint64_t index, std::vector<i64>& tuple) const;
  virtual bool admissible(const std::vector<i64>&) const { return true; }
  virtual bool check(const std::vector<i64>& tuple) = 0;

  virtual bool has_bulk_exhaustive() const { return false; }
  virtual void run_bulk(Reporter& rep);
  /// Optional summary (for example, which printed reading of a statement held).
  virtual std::string note() { return std::string(); }

  std::vector<std::string> slot_names() const;
};

std::unique_ptr<CaseSet> make_case_set(IdentityId id, i64 p);

VerificationReport run_case_set(IdentityId id, i64 p, CaseSet& cs, const Mode& mode);

}  // namespace applf::verify_detail
