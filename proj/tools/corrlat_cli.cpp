// corrlat command-line driver: reads a JSON scenario config, runs one of the
// sweep subcommands, and writes the result grid as CSV or JSON.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "corrlat/commands.hpp"
#include "corrlat/constants.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Dipole / Casimir-Polder energies over corrugated conductors"};
    app.set_version_flag("--version", std::string(corrlat::kCodeVersion));
    app.require_subcommand(1);
    app.fallthrough(); // accept global flags after the subcommand too

    std::string config_path;
    std::string out_path;
    corrlat::cli::Options opt;

    app.add_option("-c,--config", config_path, "JSON scenario config")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("-o,--out", out_path, "output file (default: stdout)");
    app.add_option("--format", opt.format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", opt.threads, "worker threads for sweeps")
        ->check(CLI::PositiveNumber);
    app.add_flag("--allow-large-amplitude", opt.allow_large_amplitude,
                 "disable the first-order a/z0 validity guard");

    const char* names[] = {"energy",    "regime-map", "xmin-map",
                           "transition", "frequency", "oracle-check"};
    const char* descs[] = {
        "energy landscape U(x0) (optionally over a z0 list)",
        "regime, phase, and border map over (lambda/z0, phi)",
        "x_min maps over orientation, or envelope/coverage vs lambda/z0",
        "peak/valley transition value g per aspect ratio",
        "lateral oscillation frequency vs z0",
        "closed form vs real-space integral cross-check"};
    for (int i = 0; i < 6; ++i) app.add_subcommand(names[i], descs[i]);

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    nlohmann::json config;
    try {
        std::ifstream in(config_path);
        config = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
        std::cerr << "error: cannot parse config " << config_path << ": "
                  << e.what() << "\n";
        return 2;
    }

    std::ofstream file_out;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) {
            std::cerr << "error: cannot open output file " << out_path << "\n";
            return 2;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file_out;

    std::string error;
    const int code = corrlat::cli::dispatch(command, config, opt, out, &error);
    if (code != 0) std::cerr << "error: " << error << "\n";
    return code;
}
