#pragma once

// Invariant suites run by `opencat verify`: unitarity, exact Egorov, Weyl
// identity/Hermiticity/linearity, eigensolver oracle and Weyl/left agreement.

#include <cstdint>
#include <string>
#include <vector>

#include "opencat/metaplectic.hpp"

namespace opencat {

struct CheckResult {
  std::string name;
  int n = 0;  // 0 when the check is not tied to one dimension
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  std::vector<int> dims{32, 64, 128};
  std::uint64_t seed = 0;
  MetaplecticOptions metaplectic{};  // dft_sign = Flipped breaks the Egorov checks
  bool include_weyl_left = true;     // the N = 128 -> 256 comparison takes a few seconds
};

std::vector<CheckResult> run_verify(const VerifyOptions& opts);

std::string format_check(const CheckResult& c);

}  // namespace opencat
