#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace sivie::cli {

/// Self-contained SVG line chart of |error| against zeta.
void write_error_svg(std::ostream& out, std::span<const double> zeta, std::span<const double> abs_error,
                     const std::string& title);

}  // namespace sivie::cli
