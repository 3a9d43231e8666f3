#include "magphon/kernels.hpp"

#include <immintrin.h>

#include <cmath>
#include <numbers>

// AVX2 kernels, 4 doubles per vector. Reductions keep a fixed lane-grouping
// and a fixed horizontal order, so results are bitwise reproducible for a
// given node count; maps (spectral_row) compute every index from the same
// IEEE expression regardless of chunk boundaries.

namespace magphon::kernels {

namespace {

inline double hsum(__m256d v) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, v);
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

std::complex<double> coupling_sum_avx2(double omega, double omega_p, double eta,
                                       const double* om, const double* w, const double* na,
                                       const double* ne, std::size_t n) {
    const __m256d veta = _mm256_set1_pd(eta);
    const __m256d veta2 = _mm256_set1_pd(eta * eta);
    const __m256d vxe0 = _mm256_set1_pd(omega - omega_p);
    const __m256d vxa0 = _mm256_set1_pd(omega + omega_p);
    __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
    std::size_t q = 0;
    for (; q + 4 <= n; q += 4) {
        const __m256d vom = _mm256_loadu_pd(om + q);
        const __m256d vw = _mm256_loadu_pd(w + q);
        const __m256d xe = _mm256_sub_pd(vxe0, vom);
        const __m256d de = _mm256_div_pd(_mm256_mul_pd(vw, _mm256_loadu_pd(ne + q)),
                                         _mm256_fmadd_pd(xe, xe, veta2));
        re = _mm256_fmadd_pd(de, xe, re);
        im = _mm256_fnmadd_pd(de, veta, im);
        if (na) {
            const __m256d xa = _mm256_sub_pd(vxa0, vom);
            const __m256d da = _mm256_div_pd(_mm256_mul_pd(vw, _mm256_loadu_pd(na + q)),
                                             _mm256_fmadd_pd(xa, xa, veta2));
            re = _mm256_fmadd_pd(da, xa, re);
            im = _mm256_fnmadd_pd(da, veta, im);
        }
    }
    double sre = hsum(re), sim = hsum(im);
    const double eta2 = eta * eta;
    for (; q < n; ++q) {
        const double xe = omega - omega_p - om[q];
        const double de = w[q] * ne[q] / (xe * xe + eta2);
        sre += de * xe;
        sim -= de * eta;
        if (na) {
            const double xa = omega + omega_p - om[q];
            const double da = w[q] * na[q] / (xa * xa + eta2);
            sre += da * xa;
            sim -= da * eta;
        }
    }
    return {sre, sim};
}

std::complex<double> matsubara_sum_avx2(double w_m, double beta, double omega_p,
                                        const double* om, const double* w, std::size_t nq,
                                        long n_trunc) {
    const double two_pi_over_beta = 2.0 * std::numbers::pi / beta;
    const double op2 = omega_p * omega_p;
    __m256d re = _mm256_setzero_pd(), im = _mm256_setzero_pd();
    double sre = 0.0, sim = 0.0;
    for (long n = -n_trunc; n <= n_trunc; ++n) {
        const double wn = two_pi_over_beta * static_cast<double>(n);
        const double d = 2.0 * omega_p / (-(wn * wn) - op2);
        const double t = w_m - wn;
        const __m256d vd = _mm256_set1_pd(d);
        const __m256d vt = _mm256_set1_pd(t);
        const __m256d vt2 = _mm256_set1_pd(t * t);
        std::size_t q = 0;
        for (; q + 4 <= nq; q += 4) {
            const __m256d vom = _mm256_loadu_pd(om + q);
            const __m256d x = _mm256_div_pd(_mm256_mul_pd(_mm256_loadu_pd(w + q), vd),
                                            _mm256_fmadd_pd(vom, vom, vt2));
            re = _mm256_fnmadd_pd(x, vom, re);
            im = _mm256_fnmadd_pd(x, vt, im);
        }
        for (; q < nq; ++q) {
            const double x = w[q] * d / (om[q] * om[q] + t * t);
            sre -= x * om[q];
            sim -= x * t;
        }
    }
    return {sre + hsum(re), sim + hsum(im)};
}

void spectral_row_avx2(double ok, double eta, const double* omega, const double* re_d,
                       const double* im_d, std::size_t i0, std::size_t i1, double* out) {
    const double inv_pi = 1.0 / std::numbers::pi;
    const __m256d vok = _mm256_set1_pd(ok);
    const __m256d veta = _mm256_set1_pd(eta);
    const __m256d vip = _mm256_set1_pd(inv_pi);
    std::size_t i = i0;
    for (; i + 4 <= i1; i += 4) {
        const __m256d x = _mm256_sub_pd(_mm256_sub_pd(_mm256_loadu_pd(omega + i), vok),
                                        _mm256_loadu_pd(re_d + i));
        const __m256d y = _mm256_sub_pd(veta, _mm256_loadu_pd(im_d + i));
        const __m256d den = _mm256_fmadd_pd(x, x, _mm256_mul_pd(y, y));
        _mm256_storeu_pd(out + i, _mm256_div_pd(_mm256_mul_pd(vip, y), den));
    }
    for (; i < i1; ++i) {
        // same fma structure as the vector body so chunk boundaries cannot
        // change the bits of any index
        const double x = (omega[i] - ok) - re_d[i];
        const double y = eta - im_d[i];
        out[i] = (inv_pi * y) / std::fma(x, x, y * y);
    }
}

double dos_sum_avx2(double x, double im_eff, const double* ok, const double* wk,
                    std::size_t nk) {
    const __m256d vx = _mm256_set1_pd(x);
    const __m256d vg2 = _mm256_set1_pd(im_eff * im_eff);
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= nk; k += 4) {
        const __m256d d = _mm256_sub_pd(vx, _mm256_loadu_pd(ok + k));
        acc = _mm256_add_pd(acc,
                            _mm256_div_pd(_mm256_loadu_pd(wk + k), _mm256_fmadd_pd(d, d, vg2)));
    }
    double s = hsum(acc);
    for (; k < nk; ++k) {
        const double d = x - ok[k];
        s += wk[k] / (d * d + im_eff * im_eff);
    }
    return s * im_eff / std::numbers::pi;
}

} // namespace

const Variant& avx2() {
    static const Variant v{"avx2", coupling_sum_avx2, matsubara_sum_avx2, spectral_row_avx2,
                           dos_sum_avx2};
    return v;
}

} // namespace magphon::kernels
