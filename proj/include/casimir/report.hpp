#pragma once

#include <string>
#include <vector>

namespace casimir {

enum class CheckStatus { Pass, Fail, Skipped };

/// One verification item. ref names the identity being checked (a short
/// formula string) or "plumbing" for infrastructure checks.
struct Check {
  std::string name;
  std::string ref;
  CheckStatus status = CheckStatus::Pass;
  std::string skip_reason;  // only when Skipped
  std::string detail;
};

struct VerificationRecord {
  std::string subject;
  std::vector<Check> checks;

  void add(bool ok, std::string name, std::string ref, std::string detail = "");
  void add_skip(std::string name, std::string ref, std::string reason);
  void append(const VerificationRecord& other);

  int failures() const;
  bool all_passed() const { return failures() == 0; }
};

/// One check per line: <status>\t<name>\t<ref>\t<detail>; deterministic.
std::string to_text(const VerificationRecord& r);

/// Machine format: one key=value record per line.
std::string to_structured(const VerificationRecord& r);

}  // namespace casimir
