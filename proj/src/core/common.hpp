#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace catk {

using Obj = std::int32_t;
using Mor = std::int32_t;

inline constexpr Mor kNoMor = -1;

// Thrown on caller errors (bad ids, base mismatches). Domain-level negative
// outcomes (audit failures, refusals, exhausted budgets) are values, not throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

// First violated axiom plus a human-readable witness.
struct AuditIssue {
  std::string axiom;
  std::string detail;
};

struct AuditResult {
  std::optional<AuditIssue> issue;
  // False when a check budget truncated the sweep (nothing failed up to there).
  bool exhaustive = true;
  std::uint64_t checked = 0;

  bool ok() const { return !issue.has_value(); }
};

inline AuditResult auditFail(std::string axiom, std::string detail,
                             std::uint64_t checked = 0) {
  AuditResult r;
  r.issue = AuditIssue{std::move(axiom), std::move(detail)};
  r.checked = checked;
  return r;
}

}  // namespace catk
