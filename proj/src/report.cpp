#include "facering/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace facering {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skip: return "skip";
  }
  return "fail";
}

void VerificationReport::compare(std::string check, std::string rule, std::string digest,
                                 std::string expected, std::string actual) {
  const Verdict v = expected == actual ? Verdict::pass : Verdict::fail;
  records_.push_back({std::move(check), std::move(rule), std::move(digest),
                      std::move(expected), std::move(actual), v});
}

void VerificationReport::skip(std::string check, std::string rule, std::string digest,
                              std::string reason) {
  records_.push_back({std::move(check), std::move(rule), std::move(digest),
                      std::move(reason), "", Verdict::skip});
}

void VerificationReport::merge(const VerificationReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t VerificationReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(
      records_.begin(), records_.end(), [v](const CheckRecord& r) { return r.verdict == v; }));
}

std::string VerificationReport::to_structured() const {
  std::ostringstream os;
  for (const auto& r : records_) {
    nlohmann::ordered_json line;
    line["check"] = r.check;
    line["rule"] = r.rule;
    line["digest"] = r.digest;
    line["expected"] = r.expected;
    line["actual"] = r.actual;
    line["verdict"] = to_string(r.verdict);
    os << line.dump() << '\n';
  }
  return os.str();
}

std::string VerificationReport::to_human() const {
  std::size_t width = 0;
  for (const auto& r : records_) width = std::max(width, r.check.size());
  std::ostringstream os;
  for (const auto& r : records_) {
    os << '[' << to_string(r.verdict) << "] " << r.check
       << std::string(width - r.check.size() + 2, ' ');
    if (r.verdict == Verdict::skip) {
      os << r.expected;
    } else {
      os << "expected " << r.expected << ", got " << r.actual;
    }
    os << "    # " << r.rule << '\n';
  }
  os << count(Verdict::pass) << " passed, " << count(Verdict::fail) << " failed, "
     << count(Verdict::skip) << " skipped: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace facering
