#pragma once

#include <vector>

#include "magphon/grid.hpp"

namespace magphon {

// Discrete principal-value Hilbert transform on a uniform grid:
//   Re f(w_i) ~ (1/pi) PV Int im(w') / (w' - w_i) dw'.
// The integrable singularity is subtracted analytically: the constant part
// im(w_i) integrates to a log, the remainder (im(w') - im(w_i))/(w' - w_i) is
// regular and handled by the trapezoid rule with a central-difference value
// at w' = w_i. Used by the Kramers-Kronig self-consistency checks.
std::vector<double> kramers_kronig_real(const FrequencyGrid& grid,
                                        const std::vector<double>& im);

} // namespace magphon
