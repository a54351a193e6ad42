#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rgflab/closed_forms.hpp"
#include "rgflab/patterns.hpp"

namespace rgflab {

enum class CheckKind { formula, characterization, bijection, equidistribution, cardinality };
enum class Status { pass, fail, skipped };

const char* kind_name(CheckKind k);
const char* status_name(Status s);

struct CheckResult {
  Status status = Status::pass;
  std::string witness;  // empty on pass
};

struct TheoremCheck {
  std::string id;
  CheckKind kind = CheckKind::formula;
  int n_min = 0;
  int n_max = 7;  // CI profile
  std::function<CheckResult(int n, const AvoidOptions&)> run;
};

// Every registered claim, in a fixed order.
const std::vector<TheoremCheck>& theorem_checks();

// Formula against its targets at size args(n). Witness: the first differing
// exponent vector.
TheoremCheck make_formula_check(std::string id, Formula formula, std::function<FormulaArgs(int)> args,
                                int n_min, int n_max);

struct Record {
  std::string check_id;
  CheckKind kind = CheckKind::formula;
  int n = 0;
  Status status = Status::pass;
  std::string witness;
};

struct VerifyOptions {
  std::vector<std::string> ids;  // empty: all
  std::optional<int> n_max;      // overrides each check's upper bound
  double budget_seconds = 0;     // per check; 0 disables
  unsigned threads = 1;
  EnumerationLimits limits{};
};

struct Report {
  std::vector<Record> records;

  bool ok() const;  // no fail records
  std::string json() const;
  std::string text() const;
};

// Throws DomainError on an unknown id, ResourceLimitError when n_max exceeds
// the ceiling.
Report run_checks(const VerifyOptions& opts);
Report run_checks(const std::vector<TheoremCheck>& checks, const VerifyOptions& opts);

}  // namespace rgflab
