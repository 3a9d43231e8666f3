#include "magphon/run.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "magphon/coupling.hpp"
#include "magphon/csv.hpp"
#include "magphon/selftest.hpp"
#include "magphon/spectra.hpp"
#include "magphon/thermo.hpp"

namespace magphon {

namespace {

std::string out_path(const RunConfig& cfg, const char* command) {
    return cfg.output_path.empty() ? std::string(command) + ".csv" : cfg.output_path;
}

ThermoOptions thermo_options(const RunConfig& cfg) {
    ThermoOptions opt;
    opt.quadrature_nodes = cfg.quadrature_nodes;
    opt.omega_cut = cfg.omega_cut;
    opt.workers = cfg.workers;
    return opt;
}

int cmd_coupling(const RunConfig& cfg, std::ostream& log) {
    CouplingEvaluator ev(cfg.params, cfg.quadrature_nodes);
    const RetardedFunction delta = ev.retarded_on_grid(cfg.grid, cfg.workers);
    CsvWriter w(out_path(cfg, "coupling"), "omega_eV,re_delta_eV,im_delta_eV");
    for (std::size_t i = 0; i < delta.values.size(); ++i) {
        const std::array<double, 3> r{delta.grid.omega(i), delta.values[i].real(),
                                      delta.values[i].imag()};
        w.row(r);
    }
    w.close();
    log << "coupling: " << delta.values.size() << " rows, T = " << cfg.params.T
        << " K, A = " << cfg.params.A_coupling << " eV\n";
    return exit_ok;
}

RetardedFunction shifted_coupling(const RunConfig& cfg) {
    if (cfg.params.A_coupling == 0.0) {
        RetardedFunction d;
        d.grid = cfg.grid;
        d.values.assign(cfg.grid.size(), {0.0, 0.0});
        return d;
    }
    CouplingEvaluator ev(cfg.params, cfg.quadrature_nodes);
    return total_coupling_on_grid(ev, cfg.grid, cfg.workers);
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& log) {
    const RetardedFunction dtot = shifted_coupling(cfg);
    const double kmax = sphere_radius(cfg.params);
    constexpr int nk_plot = 200; // uniform k grid for plotting
    CsvWriter w(out_path(cfg, "spectrum"), "k_over_K,omega_eV,A_signed,A_magnitude");
    for (int ik = 0; ik < nk_plot; ++ik) {
        const double k = kmax * static_cast<double>(ik) / (nk_plot - 1);
        const std::vector<double> a = spectral_row(k, cfg.params, dtot);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::array<double, 4> r{k / kmax, dtot.grid.omega(i), a[i], std::abs(a[i])};
            w.row(r);
        }
    }
    w.close();
    log << "spectrum: " << nk_plot << " x " << cfg.grid.size() << " rows\n";
    return exit_ok;
}

int cmd_dos(const RunConfig& cfg, std::ostream& log) {
    const RetardedFunction dtot = shifted_coupling(cfg);
    const std::vector<double> a =
        total_spectral_function(cfg.params, dtot, cfg.quadrature_nodes, cfg.workers);
    CsvWriter w(out_path(cfg, "dos"), "omega_eV,A_total,A_total_magnitude");
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::array<double, 3> r{cfg.grid.omega(i), a[i], std::abs(a[i])};
        w.row(r);
    }
    w.close();
    log << "dos: " << a.size() << " rows\n";
    return exit_ok;
}

int cmd_magnetization(const RunConfig& cfg, std::ostream& log) {
    const MagnetizationCurve curve =
        magnetization_curve(cfg.T_list, cfg.params, cfg.grid, thermo_options(cfg));
    CsvWriter w(out_path(cfg, "magnetization"), "T_K,m,n_B_A_integral,U_prime_D_eV");
    for (const auto& s : curve.samples) {
        const std::array<double, 4> r{s.T, s.m, s.occupied_integral, s.U_prime_D};
        w.row(r);
    }
    w.close();
    log << "magnetization: " << curve.samples.size() << " samples, A = " << cfg.params.A_coupling
        << " eV\n";
    return exit_ok;
}

int cmd_curie(const RunConfig& cfg, std::ostream& log) {
    CsvWriter w(out_path(cfg, "curie"), "A_eV,Tc_K");
    for (double a : cfg.A_list) {
        ModelParams p = cfg.params;
        p.A_coupling = a;
        const double tc = curie_temperature(p, cfg.grid, thermo_options(cfg));
        const std::array<double, 2> r{a, tc};
        w.row(r);
        log << "curie: A = " << a << " eV -> Tc = " << tc << " K\n";
    }
    w.close();
    return exit_ok;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& log) {
    if (!(cfg.params.T > 0.0))
        throw ConfigError("oracle: requires T > 0 (try --set T=300)");
    CouplingEvaluator ev(cfg.params, cfg.quadrature_nodes);
    CsvWriter w(out_path(cfg, "oracle"),
                "m,re_closed_eV,im_closed_eV,re_brute_eV,im_brute_eV,rel_err");
    double worst = 0.0;
    for (int m : {1, 2, 5, 10}) {
        const std::complex<double> closed = ev.matsubara(m);
        const std::complex<double> brute = ev.matsubara_brute(m, cfg.n_trunc);
        const double rel = std::abs(closed - brute) / std::abs(closed);
        worst = std::max(worst, rel);
        const std::array<double, 6> r{static_cast<double>(m), closed.real(), closed.imag(),
                                      brute.real(), brute.imag(), rel};
        w.row(r);
    }
    w.close();
    log << "oracle: max rel err " << worst << " (N = " << cfg.n_trunc << ")\n";
    return worst < 1e-3 ? exit_ok : exit_selfcheck;
}

} // namespace

int run_command(const std::string& command, const RunConfig& cfg, std::ostream& log) {
    try {
        cfg.validate();
        if (command == "coupling") return cmd_coupling(cfg, log);
        if (command == "spectrum") return cmd_spectrum(cfg, log);
        if (command == "dos") return cmd_dos(cfg, log);
        if (command == "magnetization") return cmd_magnetization(cfg, log);
        if (command == "curie") return cmd_curie(cfg, log);
        if (command == "oracle") return cmd_oracle(cfg, log);
        if (command == "selftest") return run_selftest(cfg, log) ? exit_ok : exit_selfcheck;
        log << "unknown command '" << command << "'\n";
        return exit_usage;
    } catch (const ConfigError& e) {
        log << "config error: " << e.what() << "\n";
        return exit_usage;
    } catch (const IoError& e) {
        log << "io error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return exit_selfcheck;
    }
}

} // namespace magphon
