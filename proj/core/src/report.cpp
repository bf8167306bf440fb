#include "picard/report.hpp"

#include <sstream>

#include "json.hpp"

namespace picard {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Discrepancy: return "discrepancy";
  }
  return "fail";
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s ? 1 : 0;
  return n;
}

const CheckResult* Report::first_failure(bool strict) const {
  for (const auto& c : checks) {
    if (c.status == Status::Fail || (strict && c.status == Status::Discrepancy)) return &c;
  }
  return nullptr;
}

bool Report::passed(bool strict) const { return first_failure(strict) == nullptr; }

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = "picard-report/1";
  j["d"] = r.d;
  j["scope"] = r.scope;
  j["summary"] = {{"pass", r.count(Status::Pass)},
                  {"fail", r.count(Status::Fail)},
                  {"discrepancy", r.count(Status::Discrepancy)}};
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["scope"] = c.scope;
    e["id"] = c.id;
    e["claim"] = c.claim;
    e["status"] = std::string(to_string(c.status));
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.witnesses.empty()) {
      nlohmann::ordered_json w;
      for (const auto& x : c.witnesses) w[x.label] = x.value;
      e["witnesses"] = w;
    }
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string render_markdown(const Report& r) {
  std::ostringstream os;
  os << "# Verification report, d = " << r.d << ", scope " << r.scope << "\n\n";
  os << "pass " << r.count(Status::Pass) << ", fail " << r.count(Status::Fail) << ", discrepancy "
     << r.count(Status::Discrepancy) << "\n";
  std::string section;
  for (const auto& c : r.checks) {
    if (c.scope != section) {
      section = c.scope;
      os << "\n## " << section << "\n\n";
    }
    os << "- **" << to_string(c.status) << "** `" << c.id << "`: " << c.claim << "\n";
    if (!c.detail.empty()) os << "  - " << c.detail << "\n";
    for (const auto& w : c.witnesses) os << "  - " << w.label << ": `" << w.value << "`\n";
  }
  return os.str();
}

}  // namespace picard
