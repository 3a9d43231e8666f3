#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "magphon/coupling.hpp"
#include "magphon/quadrature.hpp"
#include "magphon/spectra.hpp"
#include "magphon/thermo.hpp"

using namespace magphon;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const FrequencyGrid kGrid{};

// sharp-pole reference Int dq 3q^2/K^3 n_B(omega_M(q)), no broadening,
// restricted to modes above the infrared cutoff like the pipeline integral
double sharp_pole_reference(double T, double omega_cut) {
    ModelParams p;
    const double K = sphere_radius(p);
    const GaussLegendre rule = GaussLegendre::on_interval(2048, 0.0, K);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double om = magnon_energy(rule.nodes[i], p);
        if (om < omega_cut) continue;
        s += rule.weights[i] * 3.0 * rule.nodes[i] * rule.nodes[i] / (K * K * K) *
             bose_occupation(om, T);
    }
    return s;
}

} // namespace

TEST_CASE("occupied spectrum basics") {
    ModelParams p;
    p.A_coupling = 0.0;
    RetardedFunction d0;
    d0.grid = kGrid;
    d0.values.assign(kGrid.size(), {0.0, 0.0});
    const std::vector<double> atot = total_spectral_function(p, d0, 512, 2);

    const OccupiedSpectrum at0 = occupied_spectrum(kGrid, atot, 0.0, 3e-4);
    for (double v : at0.values) CHECK(v == 0.0);

    const OccupiedSpectrum at300 = occupied_spectrum(kGrid, atot, 300.0, 3e-4);
    for (double v : at300.values) CHECK(v >= 0.0);
    // Fock tails at omega < 0 produce genuinely negative products that the
    // clamp zeroes and reports
    CHECK(at300.reported_negative > 0);
    // inside the infrared window everything is zeroed
    for (std::size_t i = kGrid.index_near(-2e-4); i <= kGrid.index_near(2e-4); ++i)
        CHECK(at300.values[i] == 0.0);
    // product of the two independently tested factors at omega = 0.1
    const std::size_t i01 = kGrid.index_near(0.1);
    CHECK_THAT(at300.values[i01],
               WithinRel(bose_occupation(0.1, 300.0) * atot[i01], 1e-12));
}

TEST_CASE("omega < 0 region contributes positively at finite coupling") {
    // at T > 0 the absorption features make A negative where n_B is negative,
    // so the occupied spectrum carries real weight below omega = 0
    ModelParams p;
    p.A_coupling = 0.064;
    p.T = 300.0;
    CouplingEvaluator ev(p);
    const RetardedFunction dtot = total_coupling_on_grid(ev, kGrid, 2);
    const std::vector<double> atot = total_spectral_function(p, dtot, 512, 2);
    const OccupiedSpectrum occ = occupied_spectrum(kGrid, atot, 300.0, 3e-4);
    double below = 0.0;
    for (std::size_t i = 0; i < occ.values.size() && kGrid.omega(i) < 0.0; ++i)
        below += occ.values[i] * kGrid.omega_step;
    CHECK(below > 0.01);
}

TEST_CASE("magnon number against the sharp-pole oracle at A = 0") {
    ModelParams p;
    p.A_coupling = 0.0;
    const MagnetizationSample s = magnetization_at(300.0, p, kGrid);
    // cut-consistent sharp reference (the raw oracle without the infrared
    // restriction is 0.1560; the eta-cut pipeline cannot reach it, see README)
    const double ref = sharp_pole_reference(300.0, 3e-4);
    CHECK_THAT(s.occupied_integral, WithinRel(ref, 0.03));
    // frozen pipeline value (numpy prototype, identical quadrature)
    CHECK_THAT(s.occupied_integral, WithinRel(0.14724162363833662, 1e-6));
    CHECK_THAT(s.m, WithinRel(0.5 - 0.14724162363833662, 1e-6));
    CHECK(s.U_prime_D == 0.0);
}

TEST_CASE("m(0) = 0.5 exactly for every coupling") {
    ModelParams p;
    for (double a : {0.0, 0.032, 0.064, 0.128}) {
        p.A_coupling = a;
        const MagnetizationSample s = magnetization_at(0.0, p, kGrid);
        CHECK(s.m == 0.5);
        CHECK(s.occupied_integral == 0.0);
    }
}

TEST_CASE("golden magnetization at A = 64 meV, T = 300 K") {
    ModelParams p;
    p.A_coupling = 0.064;
    const MagnetizationSample s = magnetization_at(300.0, p, kGrid);
    // end-to-end golden values from the prototype pipeline
    CHECK_THAT(s.m, WithinRel(0.2841480588559752, 1e-6));
    CHECK_THAT(s.U_prime_D, WithinRel(-0.07317560103603295, 1e-8));
}

TEST_CASE("infrared cutoff sensitivity is bounded and documented") {
    // halving omega_cut moves m(300 K) at A = 64 meV by ~3.4% (the measured
    // sensitivity of the eta-regularized n_B A integral; regression bound 5%)
    ModelParams p;
    p.A_coupling = 0.064;
    ThermoOptions half;
    half.omega_cut = 1.5e-4;
    const double m_full = magnetization_at(300.0, p, kGrid).m;
    const double m_half = magnetization_at(300.0, p, kGrid, half).m;
    const double rel = std::abs(m_half - m_full) / std::abs(m_full);
    INFO("omega_cut sensitivity: " << rel);
    CHECK(rel < 0.05);
    CHECK_THAT(m_half, WithinRel(0.274570, 1e-3)); // frozen prototype value
}

TEST_CASE("m(T) decreases monotonically to its zero crossing at A = 0") {
    ModelParams p;
    p.A_coupling = 0.0;
    double prev = 0.5;
    for (double t = 50.0; t <= 700.0; t += 50.0) {
        const double m = magnetization_at(t, p, kGrid).m;
        CHECK(m < prev);
        prev = m;
        if (m < 0.0) break;
    }
}

TEST_CASE("low-temperature magnon number: sharp model follows T^{3/2}") {
    // the model itself obeys the law; fit the sharp reference over [10, 100] K
    std::vector<double> lt, ln;
    for (double t = 10.0; t <= 100.0; t += 10.0) {
        lt.push_back(std::log(t));
        ln.push_back(std::log(sharp_pole_reference(t, 0.0)));
    }
    double st = 0.0, sn = 0.0, stt = 0.0, stn = 0.0;
    for (std::size_t i = 0; i < lt.size(); ++i) {
        st += lt[i];
        sn += ln[i];
        stt += lt[i] * lt[i];
        stn += lt[i] * ln[i];
    }
    const double nfit = static_cast<double>(lt.size());
    const double slope = (nfit * stn - st * sn) / (nfit * stt - st * st);
    CHECK(slope > 1.4);
    CHECK(slope < 1.6);
}

TEST_CASE("pipeline low-T exponent regression") {
    // the broadened pipeline with the eta infrared cutoff biases the fitted
    // exponent upward (measured 1.693 at defaults; the spec's 1.5 +- 0.1 band
    // is tracked as a red acceptance criterion, see the acceptance suite)
    ModelParams p;
    p.A_coupling = 0.0;
    std::vector<double> lt, ln;
    for (double t = 10.0; t <= 100.0; t += 10.0) {
        lt.push_back(std::log(t));
        ln.push_back(std::log(magnetization_at(t, p, kGrid).occupied_integral));
    }
    double st = 0.0, sn = 0.0, stt = 0.0, stn = 0.0;
    for (std::size_t i = 0; i < lt.size(); ++i) {
        st += lt[i];
        sn += ln[i];
        stt += lt[i] * lt[i];
        stn += lt[i] * ln[i];
    }
    const double nfit = static_cast<double>(lt.size());
    const double slope = (nfit * stn - st * sn) / (nfit * stt - st * st);
    CHECK_THAT(slope, WithinAbs(1.6927934721344942, 0.02));
}

TEST_CASE("curie temperature at A = 0") {
    ModelParams p;
    p.A_coupling = 0.0;
    const double tc = curie_temperature(p, kGrid);
    CHECK_THAT(tc, WithinAbs(618.6, 2.0)); // frozen prototype bisection
    // root condition: |m(Tc)| small at the 1 K bisection tolerance
    CHECK(std::abs(magnetization_at(tc, p, kGrid).m) < 1e-3);
}

TEST_CASE("curie bracket failure is signalled") {
    ModelParams p;
    p.A_coupling = 0.0;
    p.W_magnon = 1e-3; // band saturated thermally well below 50 K
    CHECK_THROWS_AS(curie_temperature(p, kGrid), std::runtime_error);
}

TEST_CASE("magnetization curve bookkeeping") {
    ModelParams p;
    const MagnetizationCurve c = magnetization_curve({0.0, 300.0}, p, kGrid);
    REQUIRE(c.samples.size() == 2);
    CHECK(c.A_coupling == p.A_coupling);
    CHECK(c.samples[0].m == 0.5);
    CHECK(c.samples[1].T == 300.0);
    CHECK(c.samples[1].m < 0.5);
    CHECK(c.samples[1].U_prime_D < 0.0);
}
