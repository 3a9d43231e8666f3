#include "magphon/kernels.hpp"

#include <cmath>
#include <numbers>

// Scalar reference kernels. Plain loops over the node arrays; complex
// division is expanded to real arithmetic so the SIMD variants can mirror the
// operation order lane by lane.

namespace magphon::kernels {

namespace {

std::complex<double> coupling_sum_scalar(double omega, double omega_p, double eta,
                                         const double* om, const double* w, const double* na,
                                         const double* ne, std::size_t n) {
    const double eta2 = eta * eta;
    double re = 0.0, im = 0.0;
    for (std::size_t q = 0; q < n; ++q) {
        const double xe = omega - omega_p - om[q];
        const double de = w[q] * ne[q] / (xe * xe + eta2);
        re += de * xe;
        im -= de * eta;
        if (na) {
            const double xa = omega + omega_p - om[q];
            const double da = w[q] * na[q] / (xa * xa + eta2);
            re += da * xa;
            im -= da * eta;
        }
    }
    return {re, im};
}

std::complex<double> matsubara_sum_scalar(double w_m, double beta, double omega_p,
                                          const double* om, const double* w, std::size_t nq,
                                          long n_trunc) {
    const double two_pi_over_beta = 2.0 * std::numbers::pi / beta;
    double re = 0.0, im = 0.0;
    for (long n = -n_trunc; n <= n_trunc; ++n) {
        const double wn = two_pi_over_beta * static_cast<double>(n);
        const double d = 2.0 * omega_p / (-(wn * wn) - omega_p * omega_p);
        const double t = w_m - wn;
        // 1/(i t - om) = (-om - i t) / (om^2 + t^2)
        for (std::size_t q = 0; q < nq; ++q) {
            const double x = w[q] * d / (om[q] * om[q] + t * t);
            re -= x * om[q];
            im -= x * t;
        }
    }
    return {re, im};
}

void spectral_row_scalar(double ok, double eta, const double* omega, const double* re_d,
                         const double* im_d, std::size_t i0, std::size_t i1, double* out) {
    const double inv_pi = 1.0 / std::numbers::pi;
    for (std::size_t i = i0; i < i1; ++i) {
        const double x = omega[i] - ok - re_d[i];
        const double y = eta - im_d[i];
        out[i] = inv_pi * y / (x * x + y * y);
    }
}

double dos_sum_scalar(double x, double im_eff, const double* ok, const double* wk,
                      std::size_t nk) {
    double acc = 0.0;
    for (std::size_t k = 0; k < nk; ++k) {
        const double d = x - ok[k];
        acc += wk[k] / (d * d + im_eff * im_eff);
    }
    return acc * im_eff / std::numbers::pi;
}

} // namespace

const Variant& scalar() {
    static const Variant v{"scalar", coupling_sum_scalar, matsubara_sum_scalar,
                           spectral_row_scalar, dos_sum_scalar};
    return v;
}

} // namespace magphon::kernels
