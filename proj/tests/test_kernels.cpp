#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "magphon/grid.hpp"
#include "magphon/kernels.hpp"

using namespace magphon;
using Catch::Matchers::WithinRel;

namespace {

// deterministic node data resembling the physical arrays
struct NodeData {
    std::vector<double> om, w, na, ne;
    explicit NodeData(std::size_t n, unsigned seed) {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        om.resize(n);
        w.resize(n);
        na.resize(n);
        ne.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = u(rng);
            om[i] = 0.1 * x * x;
            w[i] = u(rng) / static_cast<double>(n);
            na[i] = u(rng) - 0.8;
            ne[i] = 1.0 + u(rng);
        }
    }
};

bool close(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol * std::max(1e-300, std::abs(b));
}

} // namespace

TEST_CASE("variant registry") {
    CHECK(kernels::by_name("scalar") == &kernels::scalar());
    CHECK(kernels::by_name("auto") != nullptr);
    CHECK(kernels::by_name("nonsense") == nullptr);
    CHECK(std::string(kernels::active().name).size() > 0);
}

TEST_CASE("coupling_sum: active variant matches scalar reference") {
    const auto& ref = kernels::scalar();
    const auto& act = kernels::active();
    // odd sizes exercise the SIMD tail path
    for (std::size_t n : {1u, 3u, 4u, 64u, 511u, 512u, 513u}) {
        const NodeData d(n, 42 + static_cast<unsigned>(n));
        for (double omega : {-0.2, 0.0, 0.06, 0.1499, 0.35}) {
            const auto a = act.coupling_sum(omega, 0.05, 3e-4, d.om.data(), d.w.data(),
                                            d.na.data(), d.ne.data(), n);
            const auto b = ref.coupling_sum(omega, 0.05, 3e-4, d.om.data(), d.w.data(),
                                            d.na.data(), d.ne.data(), n);
            CHECK(close(a, b, 1e-12));
            // emission-only path (T = 0)
            const auto a0 = act.coupling_sum(omega, 0.05, 3e-4, d.om.data(), d.w.data(),
                                             nullptr, d.ne.data(), n);
            const auto b0 = ref.coupling_sum(omega, 0.05, 3e-4, d.om.data(), d.w.data(),
                                             nullptr, d.ne.data(), n);
            CHECK(close(a0, b0, 1e-12));
        }
    }
}

TEST_CASE("matsubara_sum: active variant matches scalar reference") {
    const auto& ref = kernels::scalar();
    const auto& act = kernels::active();
    const NodeData d(129, 7);
    const double beta = 1.0 / (8.617333262e-5 * 300.0);
    for (int m : {1, 5}) {
        const double wm = 2.0 * std::acos(-1.0) * m / beta;
        const auto a = act.matsubara_sum(wm, beta, 0.05, d.om.data(), d.w.data(), 129, 2000);
        const auto b = ref.matsubara_sum(wm, beta, 0.05, d.om.data(), d.w.data(), 129, 2000);
        // ~5e5 accumulated terms; fma-vs-plain rounding grows with the sum length
        CHECK(close(a, b, 1e-10));
    }
}

TEST_CASE("spectral_row: active variant matches scalar reference") {
    const auto& ref = kernels::scalar();
    const auto& act = kernels::active();
    FrequencyGrid g{-0.1, 0.1, 1e-3};
    const std::vector<double> om = g.omegas();
    std::vector<double> re(om.size()), im(om.size());
    for (std::size_t i = 0; i < om.size(); ++i) {
        re[i] = 0.01 * std::sin(50.0 * om[i]);
        im[i] = -0.005 * (1.0 + std::cos(30.0 * om[i]));
    }
    std::vector<double> a(om.size()), b(om.size());
    act.spectral_row(0.03, 3e-4, om.data(), re.data(), im.data(), 0, om.size(), a.data());
    ref.spectral_row(0.03, 3e-4, om.data(), re.data(), im.data(), 0, om.size(), b.data());
    for (std::size_t i = 0; i < om.size(); ++i) CHECK_THAT(a[i], WithinRel(b[i], 1e-12));
}

TEST_CASE("spectral_row: chunk boundaries do not change bits") {
    // same variant, different chunking: every index must be bit-identical,
    // which is what makes multi-worker CSV output byte-stable
    const auto& act = kernels::active();
    FrequencyGrid g{-0.05, 0.05, 1e-4};
    const std::vector<double> om = g.omegas();
    std::vector<double> re(om.size(), 0.002), im(om.size(), -0.001);
    std::vector<double> whole(om.size()), parts(om.size());
    act.spectral_row(0.01, 3e-4, om.data(), re.data(), im.data(), 0, om.size(), whole.data());
    const std::size_t cuts[] = {0, 7, 131, 400, om.size()};
    for (int c = 0; c + 1 < 5; ++c)
        act.spectral_row(0.01, 3e-4, om.data(), re.data(), im.data(), cuts[c], cuts[c + 1],
                         parts.data());
    for (std::size_t i = 0; i < om.size(); ++i) CHECK(whole[i] == parts[i]);
}

TEST_CASE("dos_sum: active variant matches scalar reference") {
    const auto& ref = kernels::scalar();
    const auto& act = kernels::active();
    for (std::size_t n : {5u, 256u, 509u}) {
        const NodeData d(n, 1234 + static_cast<unsigned>(n));
        for (double x : {-0.01, 0.05, 0.099}) {
            const double a = act.dos_sum(x, 4e-4, d.om.data(), d.w.data(), n);
            const double b = ref.dos_sum(x, 4e-4, d.om.data(), d.w.data(), n);
            CHECK_THAT(a, WithinRel(b, 1e-12));
        }
    }
}
