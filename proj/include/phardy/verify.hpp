#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace phardy::verify {

/// Outcome of one acceptance criterion. `measured` is compared against
/// `tolerance`; `detail` carries secondary measurements.
struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

CheckResult sphere_orthonormality(std::uint64_t seed);
CheckResult boundary_gram(std::uint64_t seed);
CheckResult kernel_duality(std::uint64_t seed);
CheckResult reproducing_property(std::uint64_t seed);
CheckResult gamma_oracle(std::uint64_t seed);
CheckResult bvp_roundtrip(std::uint64_t seed);
CheckResult interpolation(std::uint64_t seed);
CheckResult cubature_exactness(std::uint64_t seed);
CheckResult cubature_bound(std::uint64_t seed);
CheckResult maximum_principle(std::uint64_t seed);
CheckResult norm_consistency(std::uint64_t seed);

/// sphere, almansi, hardy, kernels, bvp, interp, cubature, all.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed);

/// One line: "[PASS] 3 kernel duality: measured 1.2e-14 <= 1e-08 (...)".
std::string format(const CheckResult& r);

}  // namespace phardy::verify
