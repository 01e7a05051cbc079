#pragma once

// CSV and SVG writers for sweep results. CSV is the record of a run: numbers
// use 17 significant digits, '.' as decimal separator and '\n' line endings.

#include <ostream>
#include <string>
#include <vector>

#include "opencat/catmap.hpp"
#include "opencat/experiments.hpp"

namespace opencat {

/// %.17g in the C locale; NaN becomes the empty string.
std::string format_number(double v);

void write_trapped_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_nontrap_csv(std::ostream& os, const std::vector<NontrapRow>& rows);
void write_classical_csv(std::ostream& os, const EscapeReport& report);

/// Re(mu_k) against N per k, with dotted horizontal lines at the targets.
void write_trapped_svg(std::ostream& os, const std::vector<SweepRow>& rows);
/// log top_modulus against log N.
void write_nontrap_svg(std::ostream& os, const std::vector<NontrapRow>& rows);

}  // namespace opencat
