#pragma once

#include <vector>

namespace magphon {

// Boltzmann constant, CODATA, eV/K. All energies are in eV, temperatures in K,
// lengths in atomic units.
inline constexpr double k_boltzmann = 8.617333262e-5;

// Physical inputs of the isotropic three-dimensional model: a sin^2 magnon
// band of width W_magnon on the Brillouin sphere of radius K = pi/a_lattice,
// a flat optical phonon at omega_P, and a momentum-independent magnon-phonon
// coupling strength A_coupling.
struct ModelParams {
    double W_magnon = 0.1;     // eV, magnon bandwidth
    double omega_P = 0.05;     // eV, optical phonon energy
    double A_coupling = 0.032; // eV, magnon-phonon coupling strength
    double eta = 3e-4;         // eV, retarded-limit broadening
    double T = 0.0;            // K
    double a_lattice = 7.0;    // atomic units

    // Throws std::invalid_argument naming the violated bound.
    void validate() const;
};

// Radius K = pi/a of the Brillouin sphere. The radial measure 3 q^2 / K^3 dq
// integrates to exactly 1 on [0, K].
double sphere_radius(const ModelParams& p);

// Sphere volume 4 pi K^3 / 3, defined so that 4 pi q^2 / Omega_BZ equals the
// normalized measure above.
double brillouin_zone_volume(const ModelParams& p);

// Magnon dispersion W * sin^2(q pi / 2K). Rejects q outside [0, K].
double magnon_energy(double q, const ModelParams& p);

// Bose occupation 1/(exp(omega/kT) - 1); 0 for omega > 0 at T = 0, -1 for
// omega < 0 at T = 0. Throws std::domain_error at omega = 0.
double bose_occupation(double omega, double T);

// Fermi occupation 1/(exp(xi/kT) + 1); step with value 1/2 at xi = 0 when T = 0.
double fermi_occupation(double xi, double T);

// Discrete stand-in for a spin-resolved electron band: levels xi relative to
// the chemical potential with normalized weights.
struct ElectronBand {
    struct Level {
        double xi;     // eV
        double weight; // dimensionless
    };
    std::vector<Level> levels;

    void validate() const; // weights positive, sum to 1 within 1e-12
};

// BZ-averaged static Green's function <(n_F(xi) - 1/2)/|xi|>. Levels with
// xi = 0 are rejected (the continuum cancellation has no discrete analog).
double averaged_greens_function(const ElectronBand& band, double T);

} // namespace magphon
