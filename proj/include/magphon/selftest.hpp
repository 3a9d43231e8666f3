#pragma once

#include <ostream>

#include "magphon/config.hpp"

namespace magphon {

// Invariant suite over the given configuration: tensor algebra, quadrature
// normalization and convergence, kernel equivalence, coupling sign structure
// and scaling, Kramers-Kronig self-consistency, Dyson identities, sum rules.
// Prints one line per check and a pass/fail count; returns true if all pass.
bool run_selftest(const RunConfig& cfg, std::ostream& out);

} // namespace magphon
