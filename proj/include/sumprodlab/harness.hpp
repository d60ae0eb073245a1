#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sumprodlab/counting.hpp"
#include "sumprodlab/families.hpp"
#include "sumprodlab/numset.hpp"

namespace sumprodlab {

enum class Tier { certified, asymptotic };

// lower: satisfied iff lhs >= rhs; upper: satisfied iff lhs <= rhs.
enum class BoundShape { lower, upper };

enum class RecordStatus { evaluated, skipped_zero_element, skipped_resource_cap };

std::string tier_name(Tier t);
std::string shape_name(BoundShape s);
std::string status_name(RecordStatus s);

// One evaluated inequality instance. Certified records hold with
// constant 1 on every input (a violation signals an implementation
// bug); asymptotic records evaluate suppressed constants as 1 and their
// verdict is informational only.
struct InequalityRecord {
  std::string id;
  Tier tier = Tier::certified;
  BoundShape shape = BoundShape::lower;
  RecordStatus status = RecordStatus::evaluated;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  // Canonical rational text when the side is exactly computed, "".
  std::string lhs_exact;
  std::string rhs_exact;
  bool satisfied = false;
  std::string note;
  std::map<std::string, double> context;
};

// Frozen record manifests; the concatenation is the full id list in
// report order.
const std::vector<std::string>& certified_record_ids();
const std::vector<std::string>& asymptotic_record_ids();
std::vector<std::string> record_manifest();

// Constant-1 inequalities, asserted exactly. Multiplicative records are
// skipped with a notice when 0 is an element; records whose evaluation
// would overrun the cap are skipped likewise.
std::vector<InequalityRecord> check_certified(const NumSet& a,
                                              const EvalContext& ctx = {});

// Every displayed growth estimate evaluated with implicit constant 1
// and base-2 logs. Requires |A| >= 2. Never asserts: verdicts and
// ratios are reported for scan-level analysis.
std::vector<InequalityRecord> measure_asymptotic(const NumSet& a,
                                                 const EvalContext& ctx = {});

// True when no evaluated certified record is violated (skipped records
// do not count against).
bool all_certified_satisfied(const std::vector<InequalityRecord>& records);

// ---- statistic registry ----------------------------------------------

// Canonical statistic names usable in scans, stats reports and search
// objectives. resolve_statistic also accepts CLI-friendly aliases
// (e.g. "sumset" for "A+A") and throws std::domain_error on unknowns.
const std::vector<std::string>& statistic_names();
std::string resolve_statistic(const std::string& name_or_alias);
BigInt evaluate_statistic(const std::string& name_or_alias, const NumSet& a,
                          const EvalContext& ctx = {});

// ---- exponent fitting --------------------------------------------------

// Least-squares fit of log2(statistic) against log2(n) over a scaling
// family; the slope is the observed growth exponent.
struct ExponentFit {
  FamilySpec family;
  std::string statistic;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sizes;
  std::vector<BigInt> values;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Requires at least 3 strictly increasing sizes and a registered
// statistic; throws std::domain_error otherwise.
ExponentFit fit_exponent(const FamilySpec& family,
                         const std::vector<std::size_t>& sizes,
                         const std::string& statistic, std::uint64_t seed,
                         const EvalContext& ctx = {});

}  // namespace sumprodlab
