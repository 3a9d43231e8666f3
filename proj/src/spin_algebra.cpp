#include "magphon/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace magphon {

namespace {

using cd = std::complex<double>;

// sigma[mu][row][col] with row/col ordered (up, down); sigma^0 is the identity
// and sigma^z = diag(1, -1), i.e. up is the first basis state.
const cd sigma[4][2][2] = {
    {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}},   // 0
    {{{0.0, 0.0}, {1.0, 0.0}}, {{1.0, 0.0}, {0.0, 0.0}}},   // x
    {{{0.0, 0.0}, {0.0, -1.0}}, {{0.0, 1.0}, {0.0, 0.0}}},  // y
    {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {-1.0, 0.0}}},  // z
};

constexpr Spin spins[2] = {Spin::up, Spin::down};

int si(Spin s) { return static_cast<int>(s); }

} // namespace

bool SpinTensor4::is_finite() const {
    for (const auto& v : entries_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

SpinTensor4 build_bare_interaction(double U) {
    SpinTensor4 t;
    for (Spin s1 : spins)
        for (Spin s2 : spins)
            for (Spin s3 : spins)
                for (Spin s4 : spins) {
                    const double d12 = s1 == s2 ? 1.0 : 0.0;
                    const double d34 = s3 == s4 ? 1.0 : 0.0;
                    const double d13 = s1 == s3 ? 1.0 : 0.0;
                    const double d24 = s2 == s4 ? 1.0 : 0.0;
                    t(s1, s2, s3, s4) = 0.5 * U * (d12 * d34 - d13 * d24);
                }
    return t;
}

bool check_crossing(const SpinTensor4& t, double tol) {
    for (Spin s1 : spins)
        for (Spin s2 : spins)
            for (Spin s3 : spins)
                for (Spin s4 : spins)
                    if (std::abs(t(s1, s2, s3, s4) + t(s1, s3, s2, s4)) > tol) return false;
    return true;
}

SpinTensor4 pauli_reconstruct(const PauliCoefficients& c) {
    SpinTensor4 t;
    for (Spin s1 : spins)
        for (Spin s2 : spins)
            for (Spin s3 : spins)
                for (Spin s4 : spins) {
                    cd sum = 0.0;
                    for (int m1 = 0; m1 < 4; ++m1)
                        for (int m2 = 0; m2 < 4; ++m2)
                            sum += sigma[m1][si(s1)][si(s2)] * c(m1, m2) *
                                   sigma[m2][si(s4)][si(s3)];
                    t(s1, s2, s3, s4) = sum;
                }
    return t;
}

PauliCoefficients pauli_decompose(const SpinTensor4& t, double tol) {
    PauliCoefficients c;
    for (int m1 = 0; m1 < 4; ++m1)
        for (int m2 = 0; m2 < 4; ++m2) {
            cd sum = 0.0;
            for (Spin s1 : spins)
                for (Spin s2 : spins)
                    for (Spin s3 : spins)
                        for (Spin s4 : spins)
                            sum += sigma[m1][si(s2)][si(s1)] * t(s1, s2, s3, s4) *
                                   sigma[m2][si(s3)][si(s4)];
            c(m1, m2) = 0.25 * sum;
        }
    // residual check; the 16 sigma x sigma products span all four-index
    // tensors, so this only trips on non-finite input or an internal bug
    const SpinTensor4 back = pauli_reconstruct(c);
    double res = 0.0;
    for (Spin s1 : spins)
        for (Spin s2 : spins)
            for (Spin s3 : spins)
                for (Spin s4 : spins)
                    res = std::max(res, std::abs(back(s1, s2, s3, s4) - t(s1, s2, s3, s4)));
    if (!(res <= tol))
        throw std::runtime_error("pauli_decompose: reconstruction residual above tolerance");
    return c;
}

} // namespace magphon
