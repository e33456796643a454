#pragma once

#include <string>

#include "ptdt/configurations.hpp"

namespace ptdt {

// Text grid of a configuration. Entries that the configuration sets are shown
// in brackets; leg values implied by the shape are bare numbers; cells outside
// the domain (the shape of a one-leg SPP, the corner of a two-leg RPP) are '#'.
std::string render_ascii(const Configuration& c);

// The same grid as a standalone SVG document.
std::string render_svg(const Configuration& c);

}  // namespace ptdt
