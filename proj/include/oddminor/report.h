#ifndef ODDMINOR_REPORT_H_
#define ODDMINOR_REPORT_H_

#include <string>
#include <vector>

namespace oddminor {

/// Outcome of a verifier: PASS when no failure was recorded.
class VerificationReport {
 public:
  void fail(std::string message) { failures_.push_back(std::move(message)); }
  void merge(const VerificationReport& other, const std::string& prefix = {});

  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }

  /// "PASS", or "FAIL" followed by one indented line per failure.
  std::string to_string() const;

 private:
  std::vector<std::string> failures_;
};

}  // namespace oddminor

#endif  // ODDMINOR_REPORT_H_
