#include "magphon/spectra.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "magphon/parallel.hpp"
#include "magphon/quadrature.hpp"

namespace magphon {

namespace {

// split Delta_total into re/im arrays once per build (kernels take SoA)
struct SplitDelta {
    std::vector<double> re, im, omega;
    explicit SplitDelta(const RetardedFunction& d) {
        const std::size_t n = d.values.size();
        re.resize(n);
        im.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            re[i] = d.values[i].real();
            im[i] = d.values[i].imag();
        }
        omega = d.grid.omegas();
    }
};

} // namespace

std::complex<double> fock_magnon_retarded(double k, double omega, const ModelParams& p) {
    return 1.0 / std::complex<double>(omega - magnon_energy(k, p), p.eta);
}

std::complex<double> renormalized_magnon_retarded(double k, std::size_t grid_index,
                                                  const ModelParams& p,
                                                  const RetardedFunction& delta_total) {
    const double omega = delta_total.grid.omega(grid_index);
    const std::complex<double> d = delta_total.values[grid_index];
    return 1.0 /
           std::complex<double>(omega - magnon_energy(k, p) - d.real(), p.eta - d.imag());
}

double spectral_function(double k, std::size_t grid_index, const ModelParams& p,
                         const RetardedFunction& delta_total) {
    return -renormalized_magnon_retarded(k, grid_index, p, delta_total).imag() /
           std::numbers::pi;
}

std::vector<double> spectral_row(double k, const ModelParams& p,
                                 const RetardedFunction& delta_total,
                                 const kernels::Variant& kernel) {
    const SplitDelta d(delta_total);
    std::vector<double> out(d.omega.size());
    kernel.spectral_row(magnon_energy(k, p), p.eta, d.omega.data(), d.re.data(), d.im.data(),
                        0, d.omega.size(), out.data());
    return out;
}

double SpectralGrid::per_k_integral(std::size_t ik) const {
    const double* a = row(ik);
    const std::size_t n = grid.size();
    double s = 0.5 * (a[0] + a[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) s += a[i];
    return s * grid.omega_step;
}

SpectralGrid build_spectral_grid(const ModelParams& p, const RetardedFunction& delta_total,
                                 int k_nodes, int workers, const kernels::Variant& kernel) {
    if (k_nodes < 1) throw std::invalid_argument("build_spectral_grid: k_nodes must be >= 1");
    SpectralGrid sg;
    sg.grid = delta_total.grid;
    const double kmax = sphere_radius(p);
    GaussLegendre rule = GaussLegendre::on_interval(k_nodes, 0.0, kmax);
    sg.k_nodes = rule.nodes;
    sg.k_measure.resize(rule.nodes.size());
    const double k3 = kmax * kmax * kmax;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sg.k_measure[i] = rule.weights[i] * 3.0 * rule.nodes[i] * rule.nodes[i] / k3;

    const SplitDelta d(delta_total);
    const std::size_t nw = sg.grid.size();
    sg.values.resize(sg.k_nodes.size() * nw);
    std::vector<double> ok(sg.k_nodes.size());
    for (std::size_t ik = 0; ik < sg.k_nodes.size(); ++ik)
        ok[ik] = magnon_energy(sg.k_nodes[ik], p);
    parallel_for(sg.k_nodes.size(), workers, [&](std::size_t b, std::size_t e) {
        for (std::size_t ik = b; ik < e; ++ik)
            kernel.spectral_row(ok[ik], p.eta, d.omega.data(), d.re.data(), d.im.data(), 0, nw,
                                sg.values.data() + ik * nw);
    });
    return sg;
}

std::vector<double> total_spectral_function(const ModelParams& p,
                                            const RetardedFunction& delta_total,
                                            int quadrature_nodes, int workers,
                                            const kernels::Variant& kernel) {
    const double kmax = sphere_radius(p);
    GaussLegendre rule = GaussLegendre::on_interval(quadrature_nodes, 0.0, kmax);
    const std::size_t nk = rule.nodes.size();
    std::vector<double> ok(nk), wk(nk);
    const double k3 = kmax * kmax * kmax;
    for (std::size_t i = 0; i < nk; ++i) {
        ok[i] = magnon_energy(rule.nodes[i], p);
        wk[i] = rule.weights[i] * 3.0 * rule.nodes[i] * rule.nodes[i] / k3;
    }

    const SplitDelta d(delta_total);
    const std::size_t nw = delta_total.grid.size();
    std::vector<double> out(nw);
    parallel_for(nw, workers, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            const double x = d.omega[i] - d.re[i];
            const double im_eff = p.eta - d.im[i];
            out[i] = kernel.dos_sum(x, im_eff, ok.data(), wk.data(), nk);
        }
    });
    return out;
}

double peak_location(const FrequencyGrid& grid, const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("peak_location: empty values");
    std::size_t imax = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[imax]) imax = i;
    if (imax == 0 || imax + 1 == values.size()) return grid.omega(imax);
    const double den = values[imax - 1] - 2.0 * values[imax] + values[imax + 1];
    if (den == 0.0) return grid.omega(imax);
    return grid.omega(imax) +
           0.5 * grid.omega_step * (values[imax - 1] - values[imax + 1]) / den;
}

} // namespace magphon
