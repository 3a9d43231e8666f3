#include "magphon/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "magphon/coupling.hpp"
#include "magphon/spectra.hpp"

namespace magphon {

OccupiedSpectrum occupied_spectrum(const FrequencyGrid& grid, const std::vector<double>& a_total,
                                   double T, double omega_cut) {
    if (a_total.size() != grid.size())
        throw std::invalid_argument("occupied_spectrum: size mismatch");
    OccupiedSpectrum out;
    out.values.resize(a_total.size());
    if (T == 0.0) return out; // n_B = 0 for omega > 0, no weight below
    // infrared boundary snapped to the grid so float noise in omega(i)
    // cannot move points in or out of the window
    const double edge = omega_cut - 0.5 * grid.omega_step;
    double peak = 0.0;
    std::vector<double> raw(a_total.size(), 0.0);
    for (std::size_t i = 0; i < a_total.size(); ++i) {
        const double w = grid.omega(i);
        if (std::abs(w) < edge) continue;
        raw[i] = bose_occupation(w, T) * a_total[i];
        peak = std::max(peak, raw[i]);
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0.0) {
            if (raw[i] < -1e-6 * peak) ++out.reported_negative;
            out.values[i] = 0.0;
        } else {
            out.values[i] = raw[i];
        }
    }
    return out;
}

double magnon_number(const FrequencyGrid& grid, const std::vector<double>& a_total, double T,
                     double omega_cut) {
    if (T == 0.0) return 0.0;
    const OccupiedSpectrum occ = occupied_spectrum(grid, a_total, T, omega_cut);
    double s = 0.0;
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double f = occ.values[i];
        s += (i == 0 || i + 1 == n) ? 0.5 * f : f;
    }
    return s * grid.omega_step;
}

MagnetizationSample magnetization_at(double T, const ModelParams& base, const FrequencyGrid& grid,
                                     const ThermoOptions& opt) {
    ModelParams p = base;
    p.T = T;
    MagnetizationSample out;
    out.T = T;
    if (T == 0.0) {
        // handled analytically: no thermal magnons, m(0) = 0.5 exactly
        out.U_prime_D = p.A_coupling == 0.0 ? 0.0 : goldstone_shift(p).U_prime_D;
        return out;
    }
    RetardedFunction delta_total;
    if (p.A_coupling == 0.0) {
        delta_total.grid = grid;
        delta_total.values.assign(grid.size(), {0.0, 0.0});
    } else {
        CouplingEvaluator ev(p, opt.quadrature_nodes);
        out.U_prime_D = ev.goldstone_shift().U_prime_D;
        delta_total = ev.retarded_on_grid(grid, opt.workers);
        for (auto& v : delta_total.values) v -= out.U_prime_D;
    }
    const std::vector<double> a_total =
        total_spectral_function(p, delta_total, opt.quadrature_nodes, opt.workers);
    out.occupied_integral = magnon_number(grid, a_total, T, opt.omega_cut);
    out.m = 0.5 - out.occupied_integral;
    return out;
}

MagnetizationCurve magnetization_curve(const std::vector<double>& temperatures,
                                       const ModelParams& base, const FrequencyGrid& grid,
                                       const ThermoOptions& opt) {
    MagnetizationCurve curve;
    curve.A_coupling = base.A_coupling;
    curve.samples.reserve(temperatures.size());
    for (double t : temperatures)
        curve.samples.push_back(magnetization_at(t, base, grid, opt));
    return curve;
}

double curie_temperature(const ModelParams& base, const FrequencyGrid& grid,
                         const ThermoOptions& opt, double t_low, double t_high) {
    auto m_at = [&](double t) { return magnetization_at(t, base, grid, opt).m; };
    double m_lo = m_at(t_low);
    double m_hi = m_at(t_high);
    while (m_hi > 0.0 && t_high < 1e4) {
        t_high *= 2.0;
        m_hi = m_at(t_high);
    }
    if (!(m_lo > 0.0 && m_hi < 0.0))
        throw std::runtime_error("curie_temperature: m(T) = 0 not bracketed");
    while (t_high - t_low > 1.0) {
        const double mid = 0.5 * (t_low + t_high);
        if (m_at(mid) > 0.0)
            t_low = mid;
        else
            t_high = mid;
    }
    return 0.5 * (t_low + t_high);
}

} // namespace magphon
