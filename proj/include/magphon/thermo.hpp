#pragma once

#include <vector>

#include "magphon/grid.hpp"
#include "magphon/model.hpp"

namespace magphon {

// Knobs of the magnetization pipeline, all spec-level defaults.
struct ThermoOptions {
    int quadrature_nodes = 512; // coupling q-integral and total-DOS k-integral
    double omega_cut = 3e-4;    // eV, infrared cutoff on the n_B * A integral
    int workers = 1;
};

// Occupied spectrum n_B(omega) * A_total(omega) on the grid. Points inside
// the infrared window |omega| < omega_cut are reported as zero (n_B is
// singular at omega = 0); negative products are clamped at zero and counted
// in reported_negative when below -1e-6 of the peak (the clamp is meant for
// grid noise; at A = 0 the omega < 0 Lorentzian tails genuinely go negative
// and are zeroed too).
struct OccupiedSpectrum {
    std::vector<double> values;
    std::size_t reported_negative = 0;
};
OccupiedSpectrum occupied_spectrum(const FrequencyGrid& grid, const std::vector<double>& a_total,
                                   double T, double omega_cut);

// Int n_B(omega) A_total(omega) d omega, trapezoid over the grid excluding
// |omega| < omega_cut (boundary resolved to the nearest grid point), clamped
// product. Exactly 0 at T = 0.
double magnon_number(const FrequencyGrid& grid, const std::vector<double>& a_total, double T,
                     double omega_cut);

// One magnetization sample: rebuilds the coupling, the Goldstone shift and
// the total spectrum at temperature T.
struct MagnetizationSample {
    double T = 0.0;
    double m = 0.5;                 // g mu_B per unit cell
    double occupied_integral = 0.0; // Int n_B A
    double U_prime_D = 0.0;         // eV
};
MagnetizationSample magnetization_at(double T, const ModelParams& base, const FrequencyGrid& grid,
                                     const ThermoOptions& opt = {});

// m(T) samples for one coupling strength.
struct MagnetizationCurve {
    double A_coupling = 0.0;
    std::vector<MagnetizationSample> samples;
};
MagnetizationCurve magnetization_curve(const std::vector<double>& temperatures,
                                       const ModelParams& base, const FrequencyGrid& grid,
                                       const ThermoOptions& opt = {});

// Bisection on m(T) = 0 to 1 K, bracket [t_low, t_high], the high end doubled
// up to 10^4 K if m(t_high) > 0. Throws std::runtime_error on bracket failure.
double curie_temperature(const ModelParams& base, const FrequencyGrid& grid,
                         const ThermoOptions& opt = {}, double t_low = 50.0,
                         double t_high = 3000.0);

} // namespace magphon
