#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sketchlab::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int threads = 0;        // 0 = hardware concurrency
  long trials_override = 0;  // 0 = the stock trial counts
};

// Statistical reproductions of the exact expectation formulas.
CheckResult check_ss_gaussian_real(const VerifyOptions& opt);
CheckResult check_ss_haar_real(const VerifyOptions& opt);
CheckResult check_ss_complex(const VerifyOptions& opt);
CheckResult check_unbiasedness(const VerifyOptions& opt);
CheckResult check_wishart_inverse(const VerifyOptions& opt);
CheckResult check_beta_inverse(const VerifyOptions& opt);
CheckResult check_two_eig_limit(const VerifyOptions& opt);

// Deterministic algebraic identities on random inputs.
CheckResult check_residual_identity(const VerifyOptions& opt);
CheckResult check_weighting_hurts(const VerifyOptions& opt);
CheckResult check_gram_correspondence(const VerifyOptions& opt);
CheckResult check_schur_properties(const VerifyOptions& opt);

// Bound validity and planning.
CheckResult check_rsvd_bounds(const VerifyOptions& opt);
CheckResult check_gn_bounds(const VerifyOptions& opt);
CheckResult check_planner(const VerifyOptions& opt);

// Figure-level reproductions.
CheckResult check_universality(const VerifyOptions& opt);
CheckResult check_determinism(const VerifyOptions& opt);

std::vector<std::string> suite_names();

/// Runs one named suite ("all" runs everything in order).
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace sketchlab::verify
