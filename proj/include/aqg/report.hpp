#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aqg/types.hpp"

namespace aqg {

/// One verified identity: id, human-readable identity name, worst residual,
/// tolerance, verdict.  pass <=> residual < tolerance.
struct ReportEntry {
  std::string id;
  std::string ref;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SkippedEntry {
  std::string id;
  std::string reason;
};

/// Machine-readable list of identity checks.  Reports are deterministic:
/// entries appear in execution order and no timestamps are recorded, so two
/// runs on the same input produce byte-identical JSON.
class VerificationReport {
 public:
  explicit VerificationReport(double tol = kDefaultTol) : tol_(tol) {}

  double tolerance() const { return tol_; }

  /// Record a residual check; returns pass/fail.
  bool check(const std::string& id, const std::string& ref, double residual);
  /// Record with a non-default tolerance.
  bool check(const std::string& id, const std::string& ref, double residual,
             double tolerance);
  /// Record a boolean verdict (residual reported as 0 or 1).
  bool check_flag(const std::string& id, const std::string& ref, bool ok);
  void skip(const std::string& id, const std::string& reason);
  void merge(const VerificationReport& other);

  bool all_passed() const;
  double max_residual() const;
  const std::vector<ReportEntry>& entries() const { return entries_; }
  const std::vector<SkippedEntry>& skipped() const { return skipped_; }
  const ReportEntry* find(const std::string& id) const;

  /// First failing entry, if any.
  std::optional<ReportEntry> first_failure() const;

  /// Norm the residuals were measured in ("reduced-operator" once a GNS
  /// representation exists, "coordinate-max" otherwise).
  void set_norm_label(const std::string& label) { norm_ = label; }
  const std::string& norm_label() const { return norm_; }

  std::string to_json(const std::string& subject) const;
  std::string to_text(const std::string& subject) const;

 private:
  double tol_;
  std::string norm_ = "coordinate-max";
  std::vector<ReportEntry> entries_;
  std::vector<SkippedEntry> skipped_;
};

/// The published catalogue of identity ids with their mathematical names.
/// `report` coverage is gated against this table in the test suite.
struct ManifestRow {
  const char* id;
  const char* ref;
};
const std::vector<ManifestRow>& identity_manifest();

}  // namespace aqg
