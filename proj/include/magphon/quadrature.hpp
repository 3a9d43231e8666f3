#pragma once

#include <vector>

namespace magphon {

// Fixed-order Gauss-Legendre rule. Nodes and weights are computed by Newton
// iteration on the Legendre recurrence, so the rule is deterministic for a
// given order and interval.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    static GaussLegendre on_interval(int n, double a, double b);
};

} // namespace magphon
