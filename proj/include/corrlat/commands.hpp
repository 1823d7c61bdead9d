#ifndef CORRLAT_COMMANDS_HPP
#define CORRLAT_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "corrlat/sweep.hpp"

namespace corrlat::cli {

struct Options {
    std::string format = "csv"; // csv | json
    int threads = 1;
    bool allow_large_amplitude = false;
};

/// Subcommand bodies. Each validates its config slice (unknown keys are
/// rejected), computes the sweep, and returns the grid with provenance meta.
SweepGrid run_energy(const nlohmann::json& config, const Options& opt);
SweepGrid run_regime_map(const nlohmann::json& config, const Options& opt);
SweepGrid run_xmin_map(const nlohmann::json& config, const Options& opt);
SweepGrid run_transition(const nlohmann::json& config, const Options& opt);
SweepGrid run_frequency(const nlohmann::json& config, const Options& opt);
SweepGrid run_oracle_check(const nlohmann::json& config, const Options& opt);

void emit(const SweepGrid& grid, const Options& opt, std::ostream& out);

/// Runs one subcommand end to end and maps failures to exit codes:
/// 0 success, 2 config error, 3 numerical nonconvergence / no sign change,
/// 4 validity-guard violation. A human-readable message lands in *error.
int dispatch(const std::string& command, const nlohmann::json& config,
             const Options& opt, std::ostream& out, std::string* error);

/// Accepts a JSON number (radians) or a string with an explicit unit suffix,
/// e.g. "90 deg", "1.5708 rad".
double parse_angle(const nlohmann::json& value, const std::string& context);

} // namespace corrlat::cli

#endif
