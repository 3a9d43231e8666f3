#include "magphon/coupling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "magphon/parallel.hpp"

namespace magphon {

CouplingEvaluator::CouplingEvaluator(const ModelParams& params, int quadrature_nodes,
                                     const kernels::Variant& kernel)
    : params_(params), kernel_(&kernel) {
    params_.validate();
    if (quadrature_nodes < 1)
        throw std::invalid_argument("CouplingEvaluator: quadrature_nodes must be >= 1");

    const double k = sphere_radius(params_);
    rule_ = GaussLegendre::on_interval(quadrature_nodes, 0.0, k);

    const std::size_t n = rule_.nodes.size();
    omega_m_.resize(n);
    weight_.resize(n);
    num_emi_.resize(n);
    const double k3 = k * k * k;
    for (std::size_t i = 0; i < n; ++i) {
        const double q = rule_.nodes[i];
        omega_m_[i] = magnon_energy(q, params_);
        weight_[i] = rule_.weights[i] * 3.0 * q * q / k3;
    }
    if (params_.T > 0.0) {
        num_abs_.resize(n);
        const double n_p = bose_occupation(params_.omega_P, params_.T);
        for (std::size_t i = 0; i < n; ++i) {
            // interior GL nodes keep omega_m strictly positive
            const double n_m = bose_occupation(omega_m_[i], params_.T);
            num_abs_[i] = n_p - n_m;
            num_emi_[i] = 1.0 + n_p + n_m;
        }
    } else {
        // T = 0: absorption dropped, occupations vanish
        for (std::size_t i = 0; i < n; ++i) num_emi_[i] = 1.0;
    }
}

std::complex<double> CouplingEvaluator::retarded(double omega) const {
    const double a2 = params_.A_coupling * params_.A_coupling;
    const std::complex<double> s = kernel_->coupling_sum(
        omega, params_.omega_P, params_.eta, omega_m_.data(), weight_.data(),
        num_abs_.empty() ? nullptr : num_abs_.data(), num_emi_.data(), omega_m_.size());
    return a2 * s;
}

RetardedFunction CouplingEvaluator::retarded_on_grid(const FrequencyGrid& grid,
                                                     int workers) const {
    RetardedFunction f;
    f.grid = grid;
    f.values.resize(grid.size());
    parallel_for(grid.size(), workers, [&](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) f.values[i] = retarded(grid.omega(i));
    });
    return f;
}

std::complex<double> CouplingEvaluator::matsubara(int m) const {
    if (!(params_.T > 0.0))
        throw std::domain_error("coupling_matsubara: requires T > 0");
    const double beta = 1.0 / (k_boltzmann * params_.T);
    const std::complex<double> iwm(0.0, 2.0 * std::numbers::pi * m / beta);
    const double a2 = params_.A_coupling * params_.A_coupling;
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < omega_m_.size(); ++i) {
        const std::complex<double> emi =
            num_emi_[i] / (iwm - params_.omega_P - omega_m_[i]);
        const std::complex<double> abs =
            num_abs_[i] / (iwm + params_.omega_P - omega_m_[i]);
        sum += weight_[i] * (emi + abs);
    }
    return a2 * sum;
}

std::complex<double> CouplingEvaluator::matsubara_brute(int m, long n_trunc) const {
    if (!(params_.T > 0.0))
        throw std::domain_error("matsubara_sum_oracle: requires T > 0");
    if (n_trunc < 10000)
        throw std::invalid_argument("matsubara_sum_oracle: n_trunc must be >= 1e4");
    const double beta = 1.0 / (k_boltzmann * params_.T);
    const double w_m = 2.0 * std::numbers::pi * m / beta;
    const std::complex<double> s = kernel_->matsubara_sum(
        w_m, beta, params_.omega_P, omega_m_.data(), weight_.data(), omega_m_.size(), n_trunc);
    const double a2 = params_.A_coupling * params_.A_coupling;
    return -(a2 / beta) * s;
}

GoldstoneShift CouplingEvaluator::goldstone_shift() const {
    return {retarded(0.0).real(), params_.T};
}

std::complex<double> coupling_retarded(double omega, const ModelParams& p) {
    return CouplingEvaluator(p).retarded(omega);
}

std::complex<double> coupling_matsubara(int m, const ModelParams& p) {
    return CouplingEvaluator(p).matsubara(m);
}

std::complex<double> matsubara_sum_oracle(int m, const ModelParams& p, long n_trunc) {
    return CouplingEvaluator(p).matsubara_brute(m, n_trunc);
}

GoldstoneShift goldstone_shift(const ModelParams& p) {
    return CouplingEvaluator(p).goldstone_shift();
}

RetardedFunction total_coupling_on_grid(const CouplingEvaluator& ev, const FrequencyGrid& grid,
                                        int workers) {
    RetardedFunction delta = ev.retarded_on_grid(grid, workers);
    const double shift = ev.goldstone_shift().U_prime_D;
    for (auto& v : delta.values) v -= shift;
    return delta;
}

} // namespace magphon
