#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace magphon::kernels {

// Hot inner loops, in scalar reference form and (on x86-64) AVX2 form chosen
// at runtime. A variant is a pure function of its arguments; for a fixed
// variant results are bitwise reproducible for any worker count. Scalar and
// SIMD variants agree to rounding, not bitwise (reduction order differs), and
// are equivalence-tested against each other.
struct Variant {
    const char* name;

    // sum over quadrature nodes of
    //   w[q] * ( na[q] / (omega + omega_p - om[q] + i eta)
    //          + ne[q] / (omega - omega_p - om[q] + i eta) )
    // na may be null (T = 0: absorption term dropped).
    std::complex<double> (*coupling_sum)(double omega, double omega_p, double eta,
                                         const double* om, const double* w, const double* na,
                                         const double* ne, std::size_t n);

    // brute-force bosonic frequency sum
    //   sum_{n=-N..N} sum_q w[q] * D(i w_n) / (i(w_m - w_n) - om[q])
    // with D(i w_n) = 2 omega_p / ((i w_n)^2 - omega_p^2); w_n = 2 pi n / beta.
    std::complex<double> (*matsubara_sum)(double w_m, double beta, double omega_p,
                                          const double* om, const double* w, std::size_t nq,
                                          long n_trunc);

    // renormalized spectral row for fixed magnon energy ok:
    //   out[i] = (1/pi) * (eta - im_d[i]) /
    //            ((omega[i] - ok - re_d[i])^2 + (eta - im_d[i])^2),  i in [i0, i1)
    void (*spectral_row)(double ok, double eta, const double* omega, const double* re_d,
                         const double* im_d, std::size_t i0, std::size_t i1, double* out);

    // radial spectral integral at one frequency:
    //   (1/pi) * sum_k wk[k] * im_eff / ((x - ok[k])^2 + im_eff^2)
    double (*dos_sum)(double x, double im_eff, const double* ok, const double* wk,
                      std::size_t nk);
};

const Variant& scalar();
#if defined(MAGPHON_HAVE_AVX2)
const Variant& avx2();
#endif

// Variant selected at startup: AVX2 when the CPU supports it, else scalar.
// The MAGPHON_KERNEL environment variable ("scalar", "avx2", "auto")
// overrides the choice.
const Variant& active();

// nullptr if the name is unknown or unsupported on this machine
const Variant* by_name(const std::string& name);

} // namespace magphon::kernels
