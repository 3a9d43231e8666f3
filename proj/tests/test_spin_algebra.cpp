#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "magphon/spin_algebra.hpp"

using namespace magphon;
using Catch::Matchers::WithinAbs;

namespace {
constexpr Spin spins[2] = {Spin::up, Spin::down};
}

TEST_CASE("bare interaction entries match the Kronecker form") {
    const SpinTensor4 t = build_bare_interaction(1.0);
    CHECK(t(Spin::up, Spin::up, Spin::up, Spin::up) == std::complex<double>(0.0));
    CHECK(t(Spin::down, Spin::down, Spin::down, Spin::down) == std::complex<double>(0.0));
    CHECK(t(Spin::down, Spin::down, Spin::up, Spin::up) == std::complex<double>(0.5));
    CHECK(t(Spin::down, Spin::up, Spin::down, Spin::up) == std::complex<double>(-0.5));
    // every entry vs the explicit delta expression
    for (Spin s1 : spins)
        for (Spin s2 : spins)
            for (Spin s3 : spins)
                for (Spin s4 : spins) {
                    const double expect =
                        0.5 * ((s1 == s2 && s3 == s4 ? 1.0 : 0.0) -
                               (s1 == s3 && s2 == s4 ? 1.0 : 0.0));
                    CHECK(t(s1, s2, s3, s4) == std::complex<double>(expect));
                }
}

TEST_CASE("crossing symmetry") {
    CHECK(check_crossing(build_bare_interaction(1.0)));
    CHECK(check_crossing(build_bare_interaction(-3.7)));
    CHECK(check_crossing(build_bare_interaction(0.0)));
    CHECK(check_crossing(SpinTensor4{})); // zero tensor

    SpinTensor4 ones;
    for (Spin s1 : spins)
        for (Spin s2 : spins)
            for (Spin s3 : spins)
                for (Spin s4 : spins) ones(s1, s2, s3, s4) = 1.0;
    CHECK_FALSE(check_crossing(ones));
}

TEST_CASE("pauli decomposition of the bare interaction") {
    // expected diag(1/4, -1/4, -1/4, -1/4): frozen from the explicit
    // contraction of all 16 components against the Pauli matrices
    const PauliCoefficients c = pauli_decompose(build_bare_interaction(1.0));
    CHECK_THAT(c(0, 0).real(), WithinAbs(0.25, 1e-14));
    for (int m = 1; m < 4; ++m) CHECK_THAT(c(m, m).real(), WithinAbs(-0.25, 1e-14));
    for (int m1 = 0; m1 < 4; ++m1)
        for (int m2 = 0; m2 < 4; ++m2)
            if (m1 != m2) CHECK_THAT(std::abs(c(m1, m2)), WithinAbs(0.0, 1e-14));
}

TEST_CASE("pauli decomposition is linear in U") {
    const PauliCoefficients c1 = pauli_decompose(build_bare_interaction(1.0));
    const PauliCoefficients c2 = pauli_decompose(build_bare_interaction(2.0));
    for (int i = 0; i < 16; ++i)
        CHECK_THAT(std::abs(c2.c[i] - 2.0 * c1.c[i]), WithinAbs(0.0, 1e-14));

    const PauliCoefficients z = pauli_decompose(SpinTensor4{});
    for (int i = 0; i < 16; ++i) CHECK(std::abs(z.c[i]) == 0.0);
}

TEST_CASE("reconstruct inverts decompose") {
    PauliCoefficients c;
    c(0, 0) = 0.25;
    c(1, 1) = c(2, 2) = c(3, 3) = -0.25;
    const SpinTensor4 t = pauli_reconstruct(c);
    const SpinTensor4 bare = build_bare_interaction(1.0);
    for (Spin s1 : spins)
        for (Spin s2 : spins)
            for (Spin s3 : spins)
                for (Spin s4 : spins)
                    CHECK_THAT(std::abs(t(s1, s2, s3, s4) - bare(s1, s2, s3, s4)),
                               WithinAbs(0.0, 1e-14));

    const SpinTensor4 z = pauli_reconstruct(PauliCoefficients{});
    for (Spin s1 : spins)
        for (Spin s2 : spins)
            for (Spin s3 : spins)
                for (Spin s4 : spins) CHECK(std::abs(z(s1, s2, s3, s4)) == 0.0);
}

TEST_CASE("round trip over a family of tensors") {
    // the sigma x sigma basis is complete, so decompose/reconstruct is exact
    // even for crossing-asymmetric input
    SpinTensor4 t;
    int n = 1;
    for (Spin s1 : spins)
        for (Spin s2 : spins)
            for (Spin s3 : spins)
                for (Spin s4 : spins) {
                    t(s1, s2, s3, s4) = {0.1 * n, -0.03 * n};
                    ++n;
                }
    const SpinTensor4 back = pauli_reconstruct(pauli_decompose(t));
    for (Spin s1 : spins)
        for (Spin s2 : spins)
            for (Spin s3 : spins)
                for (Spin s4 : spins)
                    CHECK_THAT(std::abs(back(s1, s2, s3, s4) - t(s1, s2, s3, s4)),
                               WithinAbs(0.0, 1e-12));

    for (double u : {0.5, 1.0, 4.0, -2.0}) {
        const SpinTensor4 b = build_bare_interaction(u);
        CHECK(check_crossing(b));
        const SpinTensor4 rb = pauli_reconstruct(pauli_decompose(b));
        for (Spin s1 : spins)
            for (Spin s2 : spins)
                for (Spin s3 : spins)
                    for (Spin s4 : spins)
                        CHECK_THAT(std::abs(rb(s1, s2, s3, s4) - b(s1, s2, s3, s4)),
                                   WithinAbs(0.0, 1e-12));
    }
}
