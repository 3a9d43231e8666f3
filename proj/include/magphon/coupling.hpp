#pragma once

#include <complex>
#include <vector>

#include "magphon/grid.hpp"
#include "magphon/kernels.hpp"
#include "magphon/model.hpp"
#include "magphon/quadrature.hpp"

namespace magphon {

// Temperature-dependent constant shift fixed by the Goldstone criterion:
// subtracting U_prime_D from the coupling puts the renormalized k = 0 pole
// back at omega = 0 (real part).
struct GoldstoneShift {
    double U_prime_D = 0.0; // eV
    double T = 0.0;         // K
};

// Retarded magnon-phonon coupling of the isotropic model,
//
//   Delta_MP(w) = A^2 Int_0^K dq 3q^2/K^3 [ (n_P - n_M(q)) / (w + w_P - w_M(q) + i eta)
//                                         + (1 + n_P + n_M(q)) / (w - w_P - w_M(q) + i eta) ],
//
// evaluated with a fixed-order Gauss-Legendre rule on [0, K]. At T = 0 the
// absorption term is dropped and the occupations vanish. The Bose factors are
// precomputed per (params, order), so grid evaluation reduces to the kernel
// sum; evaluation over a frequency grid is embarrassingly parallel and
// deterministic for any worker count.
class CouplingEvaluator {
public:
    explicit CouplingEvaluator(const ModelParams& params, int quadrature_nodes = 512,
                               const kernels::Variant& kernel = kernels::active());

    std::complex<double> retarded(double omega) const;
    RetardedFunction retarded_on_grid(const FrequencyGrid& grid, int workers = 1) const;

    // closed form continued to i w_m = 2 pi i m / beta; requires T > 0
    std::complex<double> matsubara(int m) const;

    // brute-force bosonic frequency sum over n in [-N, N], same q rule;
    // requires T > 0 and N >= 10^4
    std::complex<double> matsubara_brute(int m, long n_trunc) const;

    GoldstoneShift goldstone_shift() const; // U'_D = Re Delta_MP(0)

    const ModelParams& params() const { return params_; }
    int order() const { return static_cast<int>(rule_.nodes.size()); }

private:
    ModelParams params_;
    GaussLegendre rule_;           // on [0, K]
    std::vector<double> omega_m_;  // magnon energies at the nodes
    std::vector<double> weight_;   // GL weight * 3 q^2 / K^3
    std::vector<double> num_abs_;  // n_P - n_M (empty at T = 0)
    std::vector<double> num_emi_;  // 1 + n_P + n_M
    const kernels::Variant* kernel_;
};

// Spec-level entry points; each builds a fixed 512-node evaluator.
std::complex<double> coupling_retarded(double omega, const ModelParams& p);
std::complex<double> coupling_matsubara(int m, const ModelParams& p);
std::complex<double> matsubara_sum_oracle(int m, const ModelParams& p, long n_trunc);
GoldstoneShift goldstone_shift(const ModelParams& p);

// Delta_total = Delta_MP - U'_D on the grid; shared by all k.
RetardedFunction total_coupling_on_grid(const CouplingEvaluator& ev, const FrequencyGrid& grid,
                                        int workers = 1);

} // namespace magphon
