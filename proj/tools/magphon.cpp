#include <iostream>
#include <string>
#include <vector>

#include "magphon/config.hpp"
#include "magphon/run.hpp"

namespace {

void usage(std::ostream& os) {
    os << "usage: magphon <command> [--config PATH] [--set key=value ...] [--out PATH]\n"
          "               [--dump-config]\n"
          "commands: coupling | spectrum | dos | magnetization | curie | oracle | selftest\n"
          "exit codes: 0 ok, 1 usage/config error, 2 numerical self-check failure, 3 I/O error\n";
}

} // namespace

int main(int argc, char** argv) {
    using namespace magphon;
    if (argc < 2) {
        usage(std::cerr);
        return exit_usage;
    }
    const std::string command = argv[1];
    if (command == "-h" || command == "--help") {
        usage(std::cout);
        return exit_ok;
    }

    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_override;
    bool dump = false;

    for (int i = 2; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&](const char* opt) -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "magphon: " << opt << " needs an argument\n";
                std::exit(exit_usage);
            }
            return argv[++i];
        };
        if (arg == "--config")
            config_path = next("--config");
        else if (arg == "--set")
            overrides.push_back(next("--set"));
        else if (arg == "--out")
            out_override = next("--out");
        else if (arg == "--dump-config")
            dump = true;
        else {
            std::cerr << "magphon: unknown option '" << arg << "'\n";
            usage(std::cerr);
            return exit_usage;
        }
    }

    RunConfig cfg;
    try {
        cfg = config_path.empty() ? default_config() : parse_config_file(config_path);
        for (const auto& kv : overrides) apply_override(cfg, kv);
        if (!out_override.empty()) cfg.output_path = out_override;
        cfg.validate();
    } catch (const ConfigError& e) {
        std::cerr << "magphon: " << e.what() << "\n";
        return exit_usage;
    }

    if (dump) {
        std::cout << dump_config(cfg);
        return exit_ok;
    }
    return run_command(command, cfg, std::cerr);
}
