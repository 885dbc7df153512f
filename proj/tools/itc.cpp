#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "itc/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Intertwined toric code: memory experiments, validation and export"};
    app.option_defaults()->always_capture_default();

    std::string config_path;
    std::vector<std::pair<std::string, std::string>> flags;
    auto opt = [&](const std::string& name, const std::string& help) {
        auto* o = app.add_option_function<std::string>(
            "--" + name, [&flags, name](const std::string& v) { flags.emplace_back(name, v); }, help);
        return o;
    };
    app.add_option("--config", config_path, "key=value file; command-line flags override it");
    opt("geometry", "torus3 | slab | cube");
    opt("L", "lattice sizes, comma separated");
    opt("p", "qubit error rates, comma separated");
    opt("q", "measurement error rates (default: equal to p)");
    opt("rounds", "noisy syndrome rounds before the final readout");
    opt("trials", "trials per (L, p, q)");
    opt("seed", "master seed");
    opt("sector", "Z | X | both");
    opt("mode", "memory | validate | export | trace");
    opt("out", "output directory");
    opt("presentation", "toric | kvc | overcomplete");
    opt("noisy-boundary-measurements", "true | false");
    opt("matcher", "exact | greedy");
    app.add_flag_callback("--serial", [&flags] { flags.emplace_back("serial", "true"); },
                          "single-threaded reference loop");
    CLI11_PARSE(app, argc, argv);

    try {
        itc::ExperimentConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::runtime_error("cannot open config '" + config_path + "'");
            cfg = itc::parse_config(in, cfg);
        }
        for (const auto& [k, v] : flags) itc::apply_setting(cfg, k, v);
        cfg.validate();

        switch (cfg.mode) {
            case itc::Mode::Memory: {
                const auto report = itc::run_memory(cfg);
                itc::write_memory_outputs(cfg, report);
                itc::write_csv(std::cout, report.points);
                return 0;
            }
            case itc::Mode::Validate: {
                const auto report = itc::run_validate(cfg);
                for (const auto& [name, ok] : report.checks) std::cout << (ok ? "ok   " : "FAIL ") << name << '\n';
                return report.ok() ? 0 : 1;
            }
            case itc::Mode::Export: {
                for (const auto& path : itc::run_export(cfg)) std::cout << path << '\n';
                return 0;
            }
            case itc::Mode::Trace: {
                for (const auto& line : itc::run_trace(cfg)) std::cout << line << '\n';
                return 0;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "itc: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
