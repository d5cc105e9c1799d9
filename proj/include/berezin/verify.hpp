#pragma once

// Verification suites: each case compares a computed value against an
// independent reference and records which library operations it exercised.

#include <complex>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace berezin::verify {

enum class Suite { Identities, Integrals, Multiplier, Operator, Eigen, All };

/// "identities", "integrals", "multiplier", "operator", "eigen", "all"; throws DomainError otherwise.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct CaseResult {
  std::string id;
  std::string params;
  double lhs = 0.0;
  double rhs = 0.0;
  double diff = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::vector<std::string> ops;
  std::string note;  // exception text when the case threw
};

struct Case {
  std::string id;
  std::string params;
  std::vector<std::string> ops;
  bool heavy = false;  // run one at a time regardless of the job count
  /// Returns (lhs, rhs, diff); pass iff diff <= tol.
  std::function<std::tuple<double, double, double>()> run;
  double tol = 0.0;
};

struct SuiteOptions {
  int m_max = 5;
  int jobs = 1;
};

std::vector<Case> build_cases(Suite suite, const SuiteOptions& opts);

/// Runs every case of the suite on up to opts.jobs threads; the result order is
/// by case id whatever the completion order.
std::vector<CaseResult> run_suite(Suite suite, const SuiteOptions& opts);

/// Human-readable table with one line per case and a summary line.
std::string format_table(const std::vector<CaseResult>& results);
/// Same data as CSV with 17 significant digits.
std::string format_csv(const std::vector<CaseResult>& results);

/// Every public operation of the library and front end, as "module.op".
const std::vector<std::string>& operation_manifest();
/// Manifest entries not named by any result (or by extra).
std::vector<std::string> uncovered_operations(const std::vector<CaseResult>& results,
                                              const std::set<std::string>& extra = {});

struct EigenResidual {
  double h = 0.0;
  double relative = 0.0;  // max |D f - m f| / max |f| over interior points
};

/// Finite-difference magnetic Laplacian applied to K_m(., z0) on [-4, 4]^2 (n = 1).
EigenResidual eigen_residual(int m, std::complex<double> z0, double h);

}  // namespace berezin::verify
