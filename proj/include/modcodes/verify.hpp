#pragma once

// Theorem-verification harness: runs each stated covering-radius claim on a grid of small
// instances with the exact engines and classifies the outcome.
//
// Status rules:
//   MATCH           exact value equals the stated value
//   BOUND-HOLDS     exact value satisfies the stated inequality
//   FLAGGED         the claim fails on this instance and the errata file lists (id, instance)
//   SKIPPED-BUDGET  no exact value within the budget; formula value is recorded only
//   MISMATCH        the claim fails and nothing predicted it

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "modcodes/covering.hpp"

namespace modcodes {

enum class CheckStatus { Match, BoundHolds, Flagged, SkippedBudget, Mismatch };

std::string_view to_string(CheckStatus s);

/// Predicted discrepancies, one per line: "<check-id> <instance> <reason...>". '#' starts a comment.
class Errata {
 public:
  static Errata parse(const std::string& text);
  static Errata load(const std::string& path);

  bool predicts(const std::string& id, const std::string& instance) const;
  std::optional<std::string> reason(const std::string& id, const std::string& instance) const;
  const std::map<std::pair<std::string, std::string>, std::string>& entries() const { return entries_; }

 private:
  std::map<std::pair<std::string, std::string>, std::string> entries_;
};

struct CheckRow {
  std::string id;
  std::string instance;
  /// The claim instantiated, e.g. "r_L = n".
  std::string claim;
  /// Exact value, or an interval "[lo, hi]" when only bounds were reachable.
  std::string exact;
  /// Formula value as an exact rational, e.g. "7/2".
  std::string formula;
  CheckStatus status = CheckStatus::SkippedBudget;
  std::string method;
  std::optional<std::string> witness;
  std::string note;
  double seconds = 0.0;
};

struct TheoremCheckInfo {
  std::string id;
  std::string claim;
};

/// All check ids in theorem order.
const std::vector<TheoremCheckInfo>& theorem_checks();

struct VerifyOptions {
  SearchBudget budget;
  /// Enables the 4^16-vector simplex alpha k = 2 runs.
  bool extended = false;
  Errata errata;
};

struct VerifyReport {
  std::vector<CheckRow> rows;
  /// Errata entries whose instance ran and satisfied the claim.
  std::vector<std::pair<std::string, std::string>> stale_errata;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Mismatch) == 0; }
};

/// Runs the selected checks ("all" selects every check). Throws InvalidArgument on unknown ids.
VerifyReport run_verification(const std::vector<std::string>& ids, const VerifyOptions& options);

}  // namespace modcodes
