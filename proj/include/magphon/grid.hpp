#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace magphon {

// Uniform real-frequency grid. Point i is omega_min + i*omega_step; the grid
// always includes both endpoints.
struct FrequencyGrid {
    double omega_min = -0.3;
    double omega_max = 0.4;
    double omega_step = 1e-4;

    std::size_t size() const {
        return static_cast<std::size_t>(std::llround((omega_max - omega_min) / omega_step)) + 1;
    }
    double omega(std::size_t i) const { return omega_min + static_cast<double>(i) * omega_step; }

    std::vector<double> omegas() const {
        std::vector<double> w(size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = omega(i);
        return w;
    }

    // index of the grid point closest to w
    std::size_t index_near(double w) const {
        const double x = (w - omega_min) / omega_step;
        if (x <= 0.0) return 0;
        const std::size_t i = static_cast<std::size_t>(std::llround(x));
        return i >= size() ? size() - 1 : i;
    }

    bool operator==(const FrequencyGrid&) const = default;
};

// Complex function of real frequency sampled on a uniform grid.
struct RetardedFunction {
    FrequencyGrid grid;
    std::vector<std::complex<double>> values;
};

} // namespace magphon
