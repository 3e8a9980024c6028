#include "casimir/report.hpp"

#include <sstream>

namespace casimir {

void VerificationRecord::add(bool ok, std::string name, std::string ref, std::string detail) {
  checks.push_back(Check{std::move(name), std::move(ref),
                         ok ? CheckStatus::Pass : CheckStatus::Fail, "", std::move(detail)});
}

void VerificationRecord::add_skip(std::string name, std::string ref, std::string reason) {
  checks.push_back(Check{std::move(name), std::move(ref), CheckStatus::Skipped,
                         std::move(reason), ""});
}

void VerificationRecord::append(const VerificationRecord& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

int VerificationRecord::failures() const {
  int n = 0;
  for (const Check& c : checks)
    if (c.status == CheckStatus::Fail) ++n;
  return n;
}

namespace {

std::string status_str(const Check& c) {
  switch (c.status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    default:
      return "skipped(" + c.skip_reason + ")";
  }
}

}  // namespace

std::string to_text(const VerificationRecord& r) {
  std::ostringstream os;
  os << "# subject " << r.subject << '\n';
  for (const Check& c : r.checks)
    os << status_str(c) << '\t' << c.name << '\t' << c.ref << '\t' << c.detail << '\n';
  os << "# checks=" << r.checks.size() << " failures=" << r.failures() << '\n';
  return os.str();
}

std::string to_structured(const VerificationRecord& r) {
  std::ostringstream os;
  os << "subject=" << r.subject << " checks=" << r.checks.size()
     << " failures=" << r.failures() << '\n';
  for (const Check& c : r.checks) {
    os << "check=" << c.name << " status=" << status_str(c) << " ref=" << c.ref;
    if (!c.detail.empty()) os << " detail=" << c.detail;
    os << '\n';
  }
  return os.str();
}

}  // namespace casimir
