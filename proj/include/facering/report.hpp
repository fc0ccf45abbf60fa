#pragma once

#include <string>
#include <vector>

namespace facering {

enum class Verdict { pass, fail, skip };

std::string to_string(Verdict v);

/// One verified identity on one instance.
struct CheckRecord {
  std::string check;     ///< stable identifier, e.g. "pure-betti-formula"
  std::string rule;      ///< the identity being checked, in formula form
  std::string digest;    ///< digest of the instance's canonical document
  std::string expected;
  std::string actual;
  Verdict verdict = Verdict::pass;
};

class VerificationReport {
 public:
  void add(CheckRecord record) { records_.push_back(std::move(record)); }
  /// Records `expected == actual` as pass/fail.
  void compare(std::string check, std::string rule, std::string digest,
               std::string expected, std::string actual);
  void skip(std::string check, std::string rule, std::string digest,
            std::string reason);
  void merge(const VerificationReport& other);

  const std::vector<CheckRecord>& records() const { return records_; }
  std::size_t count(Verdict v) const;
  /// No record failed. Skipped records (unmet preconditions, degenerate
  /// cases) do not fail the report.
  bool passed() const { return count(Verdict::fail) == 0; }

  /// One JSON object per line: check, rule, digest, expected, actual, verdict.
  std::string to_structured() const;
  std::string to_human() const;

 private:
  std::vector<CheckRecord> records_;
};

}  // namespace facering
