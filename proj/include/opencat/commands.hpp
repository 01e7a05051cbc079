#pragma once

// Subcommands of the opencat executable, callable in-process for testing.
// Each returns the process exit code.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

namespace opencat {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;       // verify: some check failed
inline constexpr int config = 2;       // invalid or missing configuration
inline constexpr int numeric = 3;      // eigensolver did not converge or a numeric error
}  // namespace exit_code

struct CliOptions {
  std::optional<std::filesystem::path> config;
  std::optional<std::int64_t> q_max;
  std::optional<double> radius;
  bool debug_flip_dft = false;
  bool synthetic_h2 = false;  // nontrapping: replace spectral radii by h^2
};

int cmd_trapped(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_nontrapping(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_classical(const CliOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const CliOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace opencat
