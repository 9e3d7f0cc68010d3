// Seeded end-to-end verification: exact operator annihilation, numeric
// identity checks, and (full suite) rank realization and series/root
// cross-validation. Reports are deterministic for a fixed seed and suite.
#pragma once

#include <cstdint>
#include <string>

#include "gkz/json_io.hpp"

namespace gkz {

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed;
  std::vector<CheckResult> checks;  // sorted by name
  int failures;
};

// suite is "fast" or "full".
VerifyReport run_verify(const CurveMatrix& A, std::uint64_t seed, const std::string& suite,
                        const Tolerances& tol = default_tolerances());

Json verify_report_to_json(const CurveMatrix& A, const VerifyReport& report);

}  // namespace gkz
