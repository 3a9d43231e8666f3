#include "magphon/selftest.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "magphon/coupling.hpp"
#include "magphon/hilbert.hpp"
#include "magphon/kernels.hpp"
#include "magphon/quadrature.hpp"
#include "magphon/spectra.hpp"
#include "magphon/spin_algebra.hpp"
#include "magphon/thermo.hpp"

namespace magphon {

namespace {

struct Checker {
    std::ostream& out;
    int passed = 0;
    int failed = 0;

    void check(const char* name, bool ok, double measured = NAN) {
        out << (ok ? "pass  " : "FAIL  ") << name;
        if (!std::isnan(measured)) out << "  [" << measured << "]";
        out << "\n";
        (ok ? passed : failed) += 1;
    }
};

double max_abs(const std::vector<std::complex<double>>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

void spin_checks(Checker& c) {
    const SpinTensor4 bare = build_bare_interaction(1.0);
    c.check("crossing symmetry of bare interaction", check_crossing(bare));
    c.check("same-spin local entries vanish",
            std::abs(bare(Spin::up, Spin::up, Spin::up, Spin::up)) == 0.0 &&
                std::abs(bare(Spin::down, Spin::down, Spin::down, Spin::down)) == 0.0);
    SpinTensor4 ones;
    for (Spin s1 : {Spin::up, Spin::down})
        for (Spin s2 : {Spin::up, Spin::down})
            for (Spin s3 : {Spin::up, Spin::down})
                for (Spin s4 : {Spin::up, Spin::down}) ones(s1, s2, s3, s4) = 1.0;
    c.check("all-ones tensor is not crossing symmetric", !check_crossing(ones));

    const PauliCoefficients pc = pauli_decompose(bare);
    bool diag_ok = std::abs(pc(0, 0) - 0.25) < 1e-12;
    for (int m = 1; m < 4; ++m) diag_ok = diag_ok && std::abs(pc(m, m) + 0.25) < 1e-12;
    double offdiag = 0.0;
    for (int m1 = 0; m1 < 4; ++m1)
        for (int m2 = 0; m2 < 4; ++m2)
            if (m1 != m2) offdiag = std::max(offdiag, std::abs(pc(m1, m2)));
    c.check("bare interaction Pauli coefficients diag(1/4,-1/4,-1/4,-1/4)",
            diag_ok && offdiag < 1e-12);

    const SpinTensor4 back = pauli_reconstruct(pc);
    double res = 0.0;
    for (Spin s1 : {Spin::up, Spin::down})
        for (Spin s2 : {Spin::up, Spin::down})
            for (Spin s3 : {Spin::up, Spin::down})
                for (Spin s4 : {Spin::up, Spin::down})
                    res = std::max(res, std::abs(back(s1, s2, s3, s4) - bare(s1, s2, s3, s4)));
    c.check("Pauli round trip", res < 1e-12, res);
}

void quadrature_checks(Checker& c, const RunConfig& cfg) {
    const double K = sphere_radius(cfg.params);
    const GaussLegendre rule = GaussLegendre::on_interval(cfg.quadrature_nodes, 0.0, K);
    double measure = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        measure += rule.weights[i] * 3.0 * rule.nodes[i] * rule.nodes[i] / (K * K * K);
    c.check("radial measure integrates to 1", std::abs(measure - 1.0) < 1e-13,
            std::abs(measure - 1.0));
}

void kernel_checks(Checker& c, const RunConfig& cfg) {
    const auto& act = kernels::active();
    const auto& ref = kernels::scalar();
    c.check("kernel variant selected", true);
    if (&act == &ref) return;

    CouplingEvaluator ea(cfg.params, cfg.quadrature_nodes, act);
    CouplingEvaluator er(cfg.params, cfg.quadrature_nodes, ref);
    double worst = 0.0;
    for (double w : {-0.1, 0.0, 0.05, 0.11, 0.3}) {
        const auto a = ea.retarded(w), b = er.retarded(w);
        worst = std::max(worst, std::abs(a - b) / std::max(1e-300, std::abs(b)));
    }
    c.check("active kernel matches scalar reference (coupling)", worst < 1e-12, worst);
}

void coupling_checks(Checker& c, const RunConfig& cfg) {
    const ModelParams& p = cfg.params;

    ModelParams p0 = p;
    p0.A_coupling = 0.0;
    c.check("A = 0 coupling vanishes",
            std::abs(CouplingEvaluator(p0, cfg.quadrature_nodes).retarded(0.1)) == 0.0);

    if (p.A_coupling > 0.0) {
        ModelParams p2 = p;
        p2.A_coupling = 2.0 * p.A_coupling;
        const auto d1 = CouplingEvaluator(p, cfg.quadrature_nodes).retarded(0.07);
        const auto d2 = CouplingEvaluator(p2, cfg.quadrature_nodes).retarded(0.07);
        c.check("coupling scales as A^2", std::abs(d2 - 4.0 * d1) <= 1e-12 * std::abs(d2));
    }

    // quadrature convergence, probed outside the resonance bands where the
    // integrand is pole-free (inside them the eta-wide resonances converge
    // only at the acceptance tolerances, not to 1e-6; see README)
    CouplingEvaluator ev(p, cfg.quadrature_nodes);
    CouplingEvaluator ev2(p, 2 * cfg.quadrature_nodes);
    std::vector<double> probes{-p.omega_P - 0.4 * p.W_magnon, p.omega_P + 1.5 * p.W_magnon,
                               p.omega_P + 3.0 * p.W_magnon};
    if (p.T == 0.0) probes.push_back(0.0);
    double worst = 0.0;
    for (double w : probes) {
        const auto a = ev.retarded(w), b = ev2.retarded(w);
        worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    c.check("node doubling stable to 1e-6 at pole-free frequencies", worst < 1e-6, worst);

    const RetardedFunction d1 = ev.retarded_on_grid(cfg.grid, cfg.workers);
    const RetardedFunction d2g = ev2.retarded_on_grid(cfg.grid, cfg.workers);
    double grid_dev = 0.0;
    for (std::size_t i = 0; i < d1.values.size(); ++i)
        grid_dev = std::max(grid_dev, std::abs(d1.values[i] - d2g.values[i]));
    const double scale = std::max(1e-300, max_abs(d2g.values));
    c.check("node doubling on full grid within acceptance scale (5e-3)",
            grid_dev / scale < 5e-3, grid_dev / scale);

    // retarded sign structure: Im <= 0 everywhere at T = 0; at T > 0 phonon
    // absorption makes Im positive on part of omega < 0, so only omega >= 0
    // is sign-definite
    double worst_im = -1e300;
    for (std::size_t i = 0; i < d1.values.size(); ++i) {
        if (p.T > 0.0 && d1.grid.omega(i) < 0.0) continue;
        worst_im = std::max(worst_im, d1.values[i].imag());
    }
    c.check(p.T == 0.0 ? "Im Delta <= 0 on the grid (T = 0)"
                       : "Im Delta <= 0 for omega >= 0 (T > 0)",
            worst_im <= 1e-12, worst_im);

    // Kramers-Kronig self-consistency on the interior 80%
    std::vector<double> im(d1.values.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = d1.values[i].imag();
    const std::vector<double> re_kk = kramers_kronig_real(d1.grid, im);
    const std::size_t lo = d1.values.size() / 10, hi = d1.values.size() - lo;
    double kk = 0.0;
    for (std::size_t i = lo; i < hi; ++i)
        kk = std::max(kk, std::abs(re_kk[i] - d1.values[i].real()));
    c.check("Kramers-Kronig within 2% of peak on interior 80%", kk / scale < 0.02, kk / scale);

    if (p.T > 0.0) {
        const auto closed = ev.matsubara(1);
        const auto herm = std::conj(ev.matsubara(-1));
        c.check("Matsubara Hermiticity", std::abs(closed - herm) < 1e-14 * std::abs(closed));
    }

    // Goldstone: real part of the shifted coupling vanishes at omega = 0
    const double resid = std::abs((ev.retarded(0.0) - ev.goldstone_shift().U_prime_D).real());
    c.check("Goldstone shift zeroes Re Delta_total(0)", resid < 1e-15);
}

void spectra_checks(Checker& c, const RunConfig& cfg) {
    const ModelParams& p = cfg.params;
    CouplingEvaluator ev(p, cfg.quadrature_nodes);
    const RetardedFunction dtot = total_coupling_on_grid(ev, cfg.grid, cfg.workers);
    const double K = sphere_radius(p);

    // Dyson consistency: 1/r - 1/R reproduces Delta_total
    double dyson = 0.0;
    const double k_probe = 0.5 * K;
    for (std::size_t i = 0; i < cfg.grid.size(); i += std::max<std::size_t>(1, cfg.grid.size() / 64)) {
        const auto r = fock_magnon_retarded(k_probe, cfg.grid.omega(i), p);
        if (std::abs(r) <= 1e-6) continue;
        const auto R = renormalized_magnon_retarded(k_probe, i, p, dtot);
        const auto lhs = 1.0 / r - 1.0 / R;
        dyson = std::max(dyson, std::abs(lhs - dtot.values[i]) /
                                    std::max(1e-300, std::abs(dtot.values[i])));
    }
    c.check("Dyson identity 1/r - 1/R = Delta_total (rel 1e-10)",
            p.A_coupling == 0.0 || dyson < 1e-10, dyson);

    // per-k sum rule at a few nodes plus the total
    const SpectralGrid sg = build_spectral_grid(p, dtot, cfg.k_nodes, cfg.workers);
    double worst = 0.0;
    for (std::size_t ik = 0; ik < sg.k_nodes.size();
         ik += std::max<std::size_t>(1, sg.k_nodes.size() / 16))
        worst = std::max(worst, std::abs(sg.per_k_integral(ik) - 1.0));
    c.check("per-k spectral sum rule within 2%", worst < 0.02, worst);

    const std::vector<double> atot =
        total_spectral_function(p, dtot, cfg.quadrature_nodes, cfg.workers);
    double tot = 0.0;
    for (std::size_t i = 0; i < atot.size(); ++i)
        tot += (i == 0 || i + 1 == atot.size() ? 0.5 : 1.0) * atot[i];
    tot *= cfg.grid.omega_step;
    c.check("total spectral sum rule within 2%", std::abs(tot - 1.0) < 0.02,
            std::abs(tot - 1.0));

    // renormalized k = 0 peak sits at zero within eta after the shift
    const std::vector<double> row0 = spectral_row(0.0, p, dtot);
    const double peak = peak_location(cfg.grid, row0);
    c.check("Goldstone: k = 0 peak within [-eta, eta]", std::abs(peak) <= p.eta, peak);
}

void thermo_checks(Checker& c, const RunConfig& cfg) {
    ThermoOptions opt;
    opt.quadrature_nodes = cfg.quadrature_nodes;
    opt.omega_cut = cfg.omega_cut;
    opt.workers = cfg.workers;
    const MagnetizationSample s0 = magnetization_at(0.0, cfg.params, cfg.grid, opt);
    c.check("m(0) = 0.5 exactly", s0.m == 0.5);
}

} // namespace

bool run_selftest(const RunConfig& cfg, std::ostream& out) {
    Checker c{out};
    spin_checks(c);
    quadrature_checks(c, cfg);
    kernel_checks(c, cfg);
    coupling_checks(c, cfg);
    spectra_checks(c, cfg);
    thermo_checks(c, cfg);
    out << "selftest: " << c.passed << " passed, " << c.failed << " failed\n";
    return c.failed == 0;
}

} // namespace magphon
