#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "magphon/coupling.hpp"
#include "magphon/grid.hpp"
#include "magphon/kernels.hpp"
#include "magphon/model.hpp"

namespace magphon {

// Fock magnon propagator 1/(omega - omega_M(k) + i eta).
std::complex<double> fock_magnon_retarded(double k, double omega, const ModelParams& p);

// Renormalized propagator R = r/(1 - r Delta_total), evaluated in pole form
// 1/(omega - omega_M(k) - Delta_total + i eta) so that Delta_total = 0
// reproduces the Fock propagator bitwise.
std::complex<double> renormalized_magnon_retarded(double k, std::size_t grid_index,
                                                  const ModelParams& p,
                                                  const RetardedFunction& delta_total);

// A(k, omega_i) = -(1/pi) Im R; signed (magnitude is applied only at output).
double spectral_function(double k, std::size_t grid_index, const ModelParams& p,
                         const RetardedFunction& delta_total);

// A(k, .) over the full grid of delta_total.
std::vector<double> spectral_row(double k, const ModelParams& p,
                                 const RetardedFunction& delta_total,
                                 const kernels::Variant& kernel = kernels::active());

// A(k, omega) tabulated on Gauss-Legendre k nodes (for the radial measure)
// and the omega grid of delta_total.
struct SpectralGrid {
    std::vector<double> k_nodes;
    std::vector<double> k_measure; // GL weight * 3 k^2 / K^3
    FrequencyGrid grid;
    std::vector<double> values; // row-major [k][omega], signed

    const double* row(std::size_t ik) const { return values.data() + ik * grid.size(); }
    double per_k_integral(std::size_t ik) const; // trapezoid over the grid
};

SpectralGrid build_spectral_grid(const ModelParams& p, const RetardedFunction& delta_total,
                                 int k_nodes = 256, int workers = 1,
                                 const kernels::Variant& kernel = kernels::active());

// Total spectral function Int_0^K dk 3k^2/K^3 A(k, omega) on the omega grid,
// with its own Gauss-Legendre k rule (default 512 nodes).
std::vector<double> total_spectral_function(const ModelParams& p,
                                            const RetardedFunction& delta_total,
                                            int quadrature_nodes = 512, int workers = 1,
                                            const kernels::Variant& kernel = kernels::active());

// Peak location by quadratic interpolation around the grid maximum.
double peak_location(const FrequencyGrid& grid, const std::vector<double>& values);

} // namespace magphon
