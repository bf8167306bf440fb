#pragma once

// Verification reports and their JSON / Markdown renderings.

#include <string>
#include <string_view>
#include <vector>

namespace picard {

/// Discrepancy: the computation is sound but contradicts a published claim.
enum class Status { Pass, Fail, Discrepancy };
std::string_view to_string(Status s);

struct Witness {
  std::string label;
  std::string value;
};

struct CheckResult {
  std::string scope;
  std::string id;
  std::string claim;
  Status status = Status::Fail;
  std::string detail;
  std::vector<Witness> witnesses;
};

struct Report {
  int d = 0;
  std::string scope;
  std::vector<CheckResult> checks;

  std::size_t count(Status s) const;
  /// Discrepancies count as failures only when strict.
  bool passed(bool strict = false) const;
  /// First check that makes passed(strict) false, or nullptr.
  const CheckResult* first_failure(bool strict = false) const;
};

/// JSON with "schema": "picard-report/1".
std::string render_json(const Report& r);
std::string render_markdown(const Report& r);

}  // namespace picard
