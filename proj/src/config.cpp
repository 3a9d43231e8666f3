#include "magphon/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace magphon {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const std::string& where) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
        throw ConfigError(where + ": malformed number '" + text + "'");
    return v;
}

long parse_long(const std::string& text, const std::string& where) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(text.c_str(), &end, 10);
    if (end == text.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError(where + ": malformed integer '" + text + "'");
    return v;
}

// comma-separated values; each element may be a start:stop:step range
std::vector<double> parse_list(const std::string& text, const std::string& where) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError(where + ": empty list element");
        const auto c1 = item.find(':');
        if (c1 == std::string::npos) {
            out.push_back(parse_double(item, where));
            continue;
        }
        const auto c2 = item.find(':', c1 + 1);
        if (c2 == std::string::npos) throw ConfigError(where + ": range needs start:stop:step");
        const double a = parse_double(trim(item.substr(0, c1)), where);
        const double b = parse_double(trim(item.substr(c1 + 1, c2 - c1 - 1)), where);
        const double s = parse_double(trim(item.substr(c2 + 1)), where);
        if (!(s > 0.0) || b < a) throw ConfigError(where + ": bad range '" + item + "'");
        const long n = std::lround(std::floor((b - a) / s + 1e-9));
        for (long i = 0; i <= n; ++i) out.push_back(a + static_cast<double>(i) * s);
    }
    if (out.empty()) throw ConfigError(where + ": empty list");
    return out;
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_list(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += format_full(v[i]);
    }
    return s;
}

void assign(RunConfig& c, const std::string& key, const std::string& value,
            const std::string& where) {
    if (key == "W_magnon")
        c.params.W_magnon = parse_double(value, where);
    else if (key == "omega_P")
        c.params.omega_P = parse_double(value, where);
    else if (key == "A_coupling")
        c.params.A_coupling = parse_double(value, where);
    else if (key == "eta")
        c.params.eta = parse_double(value, where);
    else if (key == "T")
        c.params.T = parse_double(value, where);
    else if (key == "a_lattice")
        c.params.a_lattice = parse_double(value, where);
    else if (key == "omega_min")
        c.grid.omega_min = parse_double(value, where);
    else if (key == "omega_max")
        c.grid.omega_max = parse_double(value, where);
    else if (key == "omega_step")
        c.grid.omega_step = parse_double(value, where);
    else if (key == "quadrature_nodes")
        c.quadrature_nodes = static_cast<int>(parse_long(value, where));
    else if (key == "k_nodes")
        c.k_nodes = static_cast<int>(parse_long(value, where));
    else if (key == "omega_cut")
        c.omega_cut = parse_double(value, where);
    else if (key == "workers")
        c.workers = static_cast<int>(parse_long(value, where));
    else if (key == "n_trunc")
        c.n_trunc = parse_long(value, where);
    else if (key == "output_path")
        c.output_path = value;
    else if (key == "T_list")
        c.T_list = parse_list(value, where);
    else if (key == "A_list")
        c.A_list = parse_list(value, where);
    else
        throw ConfigError(where + ": unknown key '" + key + "'");
}

} // namespace

void RunConfig::validate() const {
    auto fail = [](const std::string& what) { throw ConfigError("config: " + what); };
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    if (!(grid.omega_min < grid.omega_max)) fail("omega_min must be < omega_max");
    if (!(grid.omega_step > 0.0)) fail("omega_step must be > 0");
    if (grid.size() < 2) fail("frequency grid needs at least 2 points");
    if (quadrature_nodes < 64) fail("quadrature_nodes must be >= 64");
    if (k_nodes < 64) fail("k_nodes must be >= 64");
    if (!(omega_cut >= 0.0)) fail("omega_cut must be >= 0");
    if (workers < 0) fail("workers must be >= 0");
    if (n_trunc < 10000) fail("n_trunc must be >= 10000");
    for (double t : T_list)
        if (!(t >= 0.0) || !std::isfinite(t)) fail("T_list entries must be >= 0");
    for (double a : A_list)
        if (!(a >= 0.0) || !std::isfinite(a)) fail("A_list entries must be >= 0");
}

RunConfig default_config() {
    RunConfig c;
    c.T_list = parse_list("0:1500:10", "default T_list");
    c.A_list = {0.0, 0.016, 0.032, 0.064, 0.128};
    return c;
}

RunConfig parse_config(const std::string& text) {
    RunConfig c = default_config();
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": empty key");
        try {
            assign(c, key, value, where);
        } catch (const ConfigError&) {
            throw;
        }
    }
    try {
        c.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string(e.what()) + " (after line " + std::to_string(lineno) + ")");
    }
    return c;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string dump_config(const RunConfig& c) {
    std::string s;
    auto put = [&s](const std::string& k, const std::string& v) { s += k + " = " + v + "\n"; };
    put("W_magnon", format_full(c.params.W_magnon));
    put("omega_P", format_full(c.params.omega_P));
    put("A_coupling", format_full(c.params.A_coupling));
    put("eta", format_full(c.params.eta));
    put("T", format_full(c.params.T));
    put("a_lattice", format_full(c.params.a_lattice));
    put("omega_min", format_full(c.grid.omega_min));
    put("omega_max", format_full(c.grid.omega_max));
    put("omega_step", format_full(c.grid.omega_step));
    put("quadrature_nodes", std::to_string(c.quadrature_nodes));
    put("k_nodes", std::to_string(c.k_nodes));
    put("omega_cut", format_full(c.omega_cut));
    put("workers", std::to_string(c.workers));
    put("n_trunc", std::to_string(c.n_trunc));
    put("output_path", c.output_path);
    put("T_list", format_list(c.T_list));
    put("A_list", format_list(c.A_list));
    return s;
}

void apply_override(RunConfig& c, const std::string& key_value) {
    const auto eq = key_value.find('=');
    if (eq == std::string::npos)
        throw ConfigError("--set expects key=value, got '" + key_value + "'");
    const std::string key = trim(key_value.substr(0, eq));
    const std::string value = trim(key_value.substr(eq + 1));
    assign(c, key, value, "--set " + key);
}

} // namespace magphon
