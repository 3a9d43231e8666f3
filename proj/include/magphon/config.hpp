#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "magphon/grid.hpp"
#include "magphon/model.hpp"

namespace magphon {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key = value run configuration. Defaults are the paper's model values;
// an empty document parses to them.
struct RunConfig {
    ModelParams params;       // W_magnon, omega_P, A_coupling, eta, T, a_lattice
    FrequencyGrid grid;       // omega_min, omega_max, omega_step
    int quadrature_nodes = 512;
    int k_nodes = 256;
    double omega_cut = 3e-4;  // eV; defaults to the default eta
    int workers = 0;          // 0 = hardware concurrency; output is worker-count independent
    long n_trunc = 200000;    // Matsubara oracle truncation
    std::string output_path;  // empty = "<command>.csv"
    std::vector<double> T_list; // magnetization temperatures, K
    std::vector<double> A_list; // curie sweep couplings, eV

    void validate() const; // throws ConfigError naming the violated invariant
};

RunConfig default_config();

// Parses `key = value` lines with '#' comments. Unknown keys, malformed
// numbers and violated invariants raise ConfigError with the line number.
// Lists accept comma-separated values and start:stop:step ranges.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Key = value echo of every field; parse_config(dump_config(c)) reproduces c.
std::string dump_config(const RunConfig& c);

// Applies one --set key=value override.
void apply_override(RunConfig& c, const std::string& key_value);

} // namespace magphon
