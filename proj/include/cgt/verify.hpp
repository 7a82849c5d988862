#pragma once

#include <string>
#include <vector>

#include "cgt/closure.hpp"

namespace cgt {

struct VerifyOptions {
  SearchLimits limits;
  int prober_max_degree = 16;  // bound for the totality probes
  int max_k = 3;               // largest tuple arity the suites run
};

struct CaseResult {
  std::string theorem;
  std::string group;
  std::string params;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string theorem;
  std::vector<CaseResult> cases;
  int passed = 0;
  int failed = 0;
  double wall_ms = 0.0;

  bool ok() const { return failed == 0; }
};

/// All known verification tags, in the order `verify all` runs them.
const std::vector<std::string>& verification_tags();

/// Run one theorem suite over the catalog.  Throws DomainError for an
/// unknown tag; per-case cap overruns are reported in the case, not fatal.
VerificationReport verify(const std::string& tag, const VerifyOptions& options = {});

/// Run every suite; reports in verification_tags() order.
std::vector<VerificationReport> verify_all(const VerifyOptions& options = {});

std::string report_to_text(const std::vector<VerificationReport>& reports);
std::string report_to_json(const std::vector<VerificationReport>& reports);

} // namespace cgt
