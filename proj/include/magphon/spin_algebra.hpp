#pragma once

#include <array>
#include <complex>

namespace magphon {

enum class Spin : int { up = 0, down = 1 };

// Four-spin-index interaction tensor v^{s1 s2}_{s3 s4}: 16 complex entries.
class SpinTensor4 {
public:
    using value_type = std::complex<double>;

    value_type& operator()(Spin s1, Spin s2, Spin s3, Spin s4) {
        return entries_[index(s1, s2, s3, s4)];
    }
    const value_type& operator()(Spin s1, Spin s2, Spin s3, Spin s4) const {
        return entries_[index(s1, s2, s3, s4)];
    }

    bool is_finite() const;

    static std::size_t index(Spin s1, Spin s2, Spin s3, Spin s4) {
        return (static_cast<std::size_t>(s1) << 3) | (static_cast<std::size_t>(s2) << 2) |
               (static_cast<std::size_t>(s3) << 1) | static_cast<std::size_t>(s4);
    }

private:
    std::array<value_type, 16> entries_{};
};

// Coefficients v_{mu1 mu2} of the Pauli expansion, mu in {0, x, y, z}.
// For the local interaction only the diagonal is nonzero.
struct PauliCoefficients {
    std::array<std::complex<double>, 16> c{};

    std::complex<double>& operator()(int mu1, int mu2) { return c[4 * mu1 + mu2]; }
    const std::complex<double>& operator()(int mu1, int mu2) const { return c[4 * mu1 + mu2]; }
};

// Local crossing-symmetric interaction
//   (U/2) (delta_{s1 s2} delta_{s3 s4} - delta_{s1 s3} delta_{s2 s4}).
// Same-spin local entries vanish identically.
SpinTensor4 build_bare_interaction(double U);

// True iff swapping the second and third spin slots negates every entry,
// to absolute tolerance tol.
bool check_crossing(const SpinTensor4& t, double tol = 1e-12);

// Pauli decomposition via the trace projection tr(s^a s^b) = 2 delta_ab:
//   c_{mu1 mu2} = (1/4) sum s^{mu1}_{s2 s1} t(s1,s2,s3,s4) s^{mu2}_{s3 s4}.
// Throws std::runtime_error if the reconstruction residual exceeds tol.
PauliCoefficients pauli_decompose(const SpinTensor4& t, double tol = 1e-12);

// Inverse map t(s1,s2,s3,s4) = sum s^{mu1}_{s1 s2} c_{mu1 mu2} s^{mu2}_{s4 s3}.
SpinTensor4 pauli_reconstruct(const PauliCoefficients& c);

} // namespace magphon
