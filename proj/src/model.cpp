#include "magphon/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace magphon {

void ModelParams::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("ModelParams: ") + what);
    };
    require(std::isfinite(W_magnon) && W_magnon > 0.0, "W_magnon must be > 0");
    require(std::isfinite(omega_P) && omega_P > 0.0, "omega_P must be > 0");
    require(std::isfinite(eta) && eta > 0.0, "eta must be > 0");
    require(std::isfinite(A_coupling) && A_coupling >= 0.0, "A_coupling must be >= 0");
    require(std::isfinite(T) && T >= 0.0, "T must be >= 0");
    require(std::isfinite(a_lattice) && a_lattice > 0.0, "a_lattice must be > 0");
}

double sphere_radius(const ModelParams& p) {
    return std::numbers::pi / p.a_lattice;
}

double brillouin_zone_volume(const ModelParams& p) {
    const double k = sphere_radius(p);
    return 4.0 * std::numbers::pi * k * k * k / 3.0;
}

double magnon_energy(double q, const ModelParams& p) {
    const double k = sphere_radius(p);
    if (!(q >= 0.0 && q <= k))
        throw std::invalid_argument("magnon_energy: q outside [0, K]");
    const double s = std::sin(q * std::numbers::pi / (2.0 * k));
    return p.W_magnon * s * s;
}

double bose_occupation(double omega, double T) {
    if (omega == 0.0)
        throw std::domain_error("bose_occupation: singular at omega = 0");
    if (T == 0.0)
        return omega > 0.0 ? 0.0 : -1.0;
    // expm1 keeps the small-omega limit kT/omega accurate
    return 1.0 / std::expm1(omega / (k_boltzmann * T));
}

double fermi_occupation(double xi, double T) {
    if (T == 0.0)
        return xi < 0.0 ? 1.0 : (xi > 0.0 ? 0.0 : 0.5);
    return 1.0 / (std::exp(xi / (k_boltzmann * T)) + 1.0);
}

void ElectronBand::validate() const {
    double sum = 0.0;
    for (const auto& l : levels) {
        if (!(l.weight > 0.0))
            throw std::invalid_argument("ElectronBand: weights must be positive");
        sum += l.weight;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("ElectronBand: weights must sum to 1");
}

double averaged_greens_function(const ElectronBand& band, double T) {
    band.validate();
    double g = 0.0;
    for (const auto& l : band.levels) {
        if (l.xi == 0.0)
            throw std::invalid_argument("averaged_greens_function: xi = 0 level");
        g += l.weight * (fermi_occupation(l.xi, T) - 0.5) / std::abs(l.xi);
    }
    return g;
}

} // namespace magphon
