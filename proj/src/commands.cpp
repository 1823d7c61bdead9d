#include "corrlat/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <vector>

#include "corrlat/classical.hpp"
#include "corrlat/constants.hpp"
#include "corrlat/quantum.hpp"

namespace corrlat::cli {

namespace {

void check_keys(const nlohmann::json& obj, const std::set<std::string>& allowed,
                const std::string& context) {
    if (!obj.is_object()) throw ConfigError(context + ": expected a JSON object");
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key))
            throw ConfigError(context + ": unknown key '" + key + "'");
    }
}

double require_number(const nlohmann::json& obj, const std::string& key,
                      const std::string& context) {
    if (!obj.contains(key)) throw ConfigError(context + ": missing key '" + key + "'");
    if (!obj[key].is_number())
        throw ConfigError(context + ": key '" + key + "' must be a number");
    return obj[key].get<double>();
}

int optional_int(const nlohmann::json& obj, const std::string& key, int fallback,
                 const std::string& context) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer())
        throw ConfigError(context + ": key '" + key + "' must be an integer");
    return obj[key].get<int>();
}

enum class Mode { Classical, Quantum };

Mode parse_mode(const nlohmann::json& config) {
    if (!config.contains("mode"))
        throw ConfigError("config: missing key 'mode' (classical|quantum)");
    const std::string mode = config["mode"].get<std::string>();
    if (mode == "classical") return Mode::Classical;
    if (mode == "quantum") return Mode::Quantum;
    throw ConfigError("config: mode must be 'classical' or 'quantum', got '" + mode + "'");
}

struct OrientationSpec {
    double phi = 0.0;
    double theta = 0.0;
};

SecondMoments parse_dipole(const nlohmann::json& config, OrientationSpec* orient) {
    if (!config.contains("dipole"))
        throw ConfigError("config: classical mode requires a 'dipole' block");
    const auto& d = config["dipole"];
    check_keys(d, {"magnitude_C_m", "phi", "theta"}, "dipole");
    const double mag = require_number(d, "magnitude_C_m", "dipole");
    if (!(mag >= 0.0)) throw ConfigError("dipole: magnitude_C_m must be >= 0");
    const double phi = d.contains("phi") ? parse_angle(d["phi"], "dipole.phi") : 0.0;
    const double theta =
        d.contains("theta") ? parse_angle(d["theta"], "dipole.theta") : 0.5 * kPi;
    if (orient) *orient = {phi, theta};
    return SecondMoments::from_dipole_spherical(mag, phi, theta);
}

SpheroidParticle parse_particle(const nlohmann::json& config) {
    if (!config.contains("particle"))
        throw ConfigError("config: quantum mode requires a 'particle' block");
    const auto& p = config["particle"];
    check_keys(p,
               {"length_m", "width_m", "B1", "omega1_rad_s", "density_kg_m3",
                "material", "catalog", "phi", "theta"},
               "particle");
    SpheroidParticle particle;
    particle.semi_major = 0.5 * require_number(p, "length_m", "particle");
    particle.semi_minor = 0.5 * require_number(p, "width_m", "particle");
    if (p.contains("material")) {
        if (!p.contains("catalog"))
            throw ConfigError("particle: 'material' requires a 'catalog' path");
        const auto records = load_material_catalog(p["catalog"].get<std::string>());
        const std::string name = p["material"].get<std::string>();
        const auto it = std::find_if(records.begin(), records.end(),
                                     [&](const auto& r) { return r.name == name; });
        if (it == records.end())
            throw ConfigError("particle: material '" + name + "' not in catalog");
        particle.material = it->material;
        particle.density = it->density;
    } else {
        particle.material.B1 = require_number(p, "B1", "particle");
        particle.material.omega1 = require_number(p, "omega1_rad_s", "particle");
        particle.density = p.contains("density_kg_m3")
                               ? require_number(p, "density_kg_m3", "particle")
                               : 0.0;
    }
    if (p.contains("density_kg_m3"))
        particle.density = require_number(p, "density_kg_m3", "particle");
    particle.phi = p.contains("phi") ? parse_angle(p["phi"], "particle.phi") : 0.0;
    particle.theta =
        p.contains("theta") ? parse_angle(p["theta"], "particle.theta") : 0.5 * kPi;
    particle.validate();
    return particle;
}

Geometry parse_geometry(const nlohmann::json& config, const Options& opt) {
    if (!config.contains("geometry"))
        throw ConfigError("config: missing 'geometry' block");
    const auto& g = config["geometry"];
    check_keys(g, {"z0_m", "amplitude_m", "lambda_m", "x0_m"}, "geometry");
    Geometry geom;
    geom.z0 = require_number(g, "z0_m", "geometry");
    geom.amplitude = require_number(g, "amplitude_m", "geometry");
    geom.lambda = require_number(g, "lambda_m", "geometry");
    geom.x0 = g.contains("x0_m") ? require_number(g, "x0_m", "geometry") : 0.0;
    geom.allow_large_amplitude = opt.allow_large_amplitude;
    geom.validate();
    return geom;
}

/// Moments for the scenario (classical dipole or quantum particle).
SecondMoments scenario_moments(const nlohmann::json& config, Mode mode) {
    if (mode == Mode::Classical) return parse_dipole(config, nullptr);
    return moment_matrix(parse_particle(config));
}

/// Moments at an overridden orientation, same magnitude conventions.
SecondMoments oriented_moments(const nlohmann::json& config, Mode mode, double phi,
                               double theta) {
    if (mode == Mode::Classical) {
        double mag = 1.0;
        if (config.contains("dipole"))
            mag = require_number(config["dipole"], "magnitude_C_m", "dipole");
        return SecondMoments::from_dipole_spherical(mag, phi, theta);
    }
    SpheroidParticle p = parse_particle(config);
    p.phi = phi;
    p.theta = theta;
    return moment_matrix(p);
}

Axis parse_axis(const nlohmann::json& obj, const std::string& name,
                const std::string& context) {
    check_keys(obj, {"start", "stop", "count", "scale"}, context);
    Axis axis;
    axis.name = name;
    axis.start = require_number(obj, "start", context);
    axis.stop = require_number(obj, "stop", context);
    axis.count = optional_int(obj, "count", 1, context);
    if (obj.contains("scale")) {
        const std::string s = obj["scale"].get<std::string>();
        if (s == "log")
            axis.scale = Axis::Scale::Log;
        else if (s == "linear")
            axis.scale = Axis::Scale::Linear;
        else
            throw ConfigError(context + ": scale must be 'linear' or 'log'");
    }
    axis.validate();
    return axis;
}

const nlohmann::json& command_block(const nlohmann::json& config,
                                    const std::string& name) {
    check_keys(config, {"mode", "dipole", "particle", "geometry", name},
               "config");
    if (!config.contains(name))
        throw ConfigError("config: missing '" + name + "' block");
    return config[name];
}

void stamp_meta(SweepGrid& grid, const nlohmann::json& config,
                const std::string& command) {
    char hex[19];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(command + config.dump())));
    grid.meta["scenario_hash"] = hex;
    grid.meta["code_version"] = kCodeVersion;
}

int regime_code(Regime r) {
    switch (r) {
        case Regime::Peak: return 0;
        case Regime::Valley: return 1;
        case Regime::Intermediate: return 2;
        case Regime::Null: return 3;
    }
    return 3;
}

} // namespace

double parse_angle(const nlohmann::json& value, const std::string& context) {
    if (value.is_number()) return value.get<double>(); // radians
    if (!value.is_string())
        throw ConfigError(context + ": expected a number (radians) or a string "
                          "with a 'deg'/'rad' suffix");
    const std::string s = value.get<std::string>();
    std::size_t pos = 0;
    double mag;
    try {
        mag = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ConfigError(context + ": cannot parse angle '" + s + "'");
    }
    std::string unit = s.substr(pos);
    unit.erase(std::remove(unit.begin(), unit.end(), ' '), unit.end());
    if (unit == "deg") return mag * kPi / 180.0;
    if (unit == "rad") return mag;
    throw ConfigError(context + ": angle '" + s + "' needs a 'deg' or 'rad' suffix");
}

SweepGrid run_energy(const nlohmann::json& config, const Options& opt) {
    const Mode mode = parse_mode(config);
    const auto& block = command_block(config, "energy");
    check_keys(block, {"x0_count", "periods", "z0_list_m"}, "energy");
    const int x0_count = optional_int(block, "x0_count", 201, "energy");
    const int periods = optional_int(block, "periods", 1, "energy");
    if (x0_count < 2 || periods < 1)
        throw ConfigError("energy: x0_count >= 2 and periods >= 1 required");

    const Geometry geom = parse_geometry(config, opt);
    const SecondMoments M = scenario_moments(config, mode);

    std::vector<double> z0_list{geom.z0};
    bool explicit_list = false;
    if (block.contains("z0_list_m")) {
        if (!block["z0_list_m"].is_array())
            throw ConfigError("energy: z0_list_m must be an array");
        z0_list = block["z0_list_m"].get<std::vector<double>>();
        if (z0_list.empty()) throw ConfigError("energy: z0_list_m is empty");
        explicit_list = true;
    }
    for (double z0 : z0_list) {
        Geometry g = geom;
        g.z0 = z0;
        g.validate();
    }

    SweepGrid grid;
    Axis x_axis{"x0_m", 0.0, periods * geom.lambda, x0_count, Axis::Scale::Linear};
    if (explicit_list) {
        grid.axes = {Axis{"z0_index", 0.0, double(z0_list.size() - 1),
                          int(z0_list.size()), Axis::Scale::Linear},
                     x_axis};
        grid.payload_names = {"z0_m", "U0_J", "U1_J", "U_total_J"};
    } else {
        grid.axes = {x_axis};
        grid.payload_names = {"U0_J", "U1_J", "U_total_J"};
    }
    grid.values.assign(grid.points() * grid.payload_names.size(), 0.0);

    parallel_for(grid.points(), opt.threads, [&](std::size_t i) {
        const auto coords = grid.coordinates(i);
        Geometry g = geom;
        std::size_t slot = 0;
        if (explicit_list) g.z0 = z0_list[static_cast<std::size_t>(coords[0])];
        g.x0 = coords.back();
        const double u0 = u0_classical(M, g.z0);
        const double u1 = u1_classical_sinusoid(M, g);
        if (explicit_list) grid.at(i, slot++) = g.z0;
        grid.at(i, slot++) = u0;
        grid.at(i, slot++) = u1;
        grid.at(i, slot) = u0 + u1;
    });
    stamp_meta(grid, config, "energy");
    return grid;
}

SweepGrid run_regime_map(const nlohmann::json& config, const Options& opt) {
    const Mode mode = parse_mode(config);
    const auto& block = command_block(config, "regime_map");
    check_keys(block, {"lambda_over_z0", "phi"}, "regime_map");
    if (!block.contains("lambda_over_z0") || !block.contains("phi"))
        throw ConfigError("regime_map: needs 'lambda_over_z0' and 'phi' axes");
    const Axis l_axis =
        parse_axis(block["lambda_over_z0"], "lambda_over_z0", "regime_map.lambda_over_z0");
    const Axis p_axis = parse_axis(block["phi"], "phi_rad", "regime_map.phi");

    // C = 0 border per phi; the polyline column repeats the value across the
    // lambda axis (NaN where no valley region exists for that phi).
    std::vector<double> border(static_cast<std::size_t>(p_axis.count));
    parallel_for(border.size(), opt.threads, [&](std::size_t j) {
        const double phi = p_axis.value(static_cast<int>(j));
        try {
            border[j] = c_border_lambda_over_z0(
                oriented_moments(config, mode, phi, 0.5 * kPi), 0.01, 30.0);
        } catch (const NoSignChange&) {
            border[j] = std::nan("");
        }
    });

    SweepGrid grid;
    grid.axes = {l_axis, p_axis};
    grid.payload_names = {"delta_rad", "regime", "xmin_over_lambda",
                          "border_lambda_over_z0"};
    grid.values.assign(grid.points() * grid.payload_names.size(), 0.0);
    parallel_for(grid.points(), opt.threads, [&](std::size_t i) {
        const auto coords = grid.coordinates(i);
        const std::size_t j = i % static_cast<std::size_t>(p_axis.count);
        const SecondMoments M = oriented_moments(config, mode, coords[1], 0.5 * kPi);
        const RegimeResult res = classify_regime(M, 2.0 * kPi / coords[0], 1.0);
        grid.at(i, 0) = res.delta;
        grid.at(i, 1) = regime_code(res.regime);
        grid.at(i, 2) = res.x_min;
        grid.at(i, 3) = border[j];
    });
    stamp_meta(grid, config, "regime_map");
    return grid;
}

SweepGrid run_xmin_map(const nlohmann::json& config, const Options& opt) {
    const Mode mode = parse_mode(config);
    const auto& block = command_block(config, "xmin_map");
    check_keys(block,
               {"phi", "theta", "lambda_over_z0", "envelope", "orientation_samples",
                "coverage_bins"},
               "xmin_map");
    const bool envelope = block.contains("envelope") && block["envelope"].get<bool>();

    SweepGrid grid;
    if (!envelope) {
        if (!block.contains("phi") || !block.contains("theta") ||
            !block.contains("lambda_over_z0") || !block["lambda_over_z0"].is_number())
            throw ConfigError("xmin_map: orientation mode needs 'phi' and 'theta' axes "
                              "and a scalar 'lambda_over_z0'");
        const Axis phi_axis = parse_axis(block["phi"], "phi_rad", "xmin_map.phi");
        const Axis theta_axis = parse_axis(block["theta"], "theta_rad", "xmin_map.theta");
        const double u = 2.0 * kPi / block["lambda_over_z0"].get<double>();
        grid.axes = {phi_axis, theta_axis};
        grid.payload_names = {"xmin_over_lambda", "delta_rad", "regime"};
        grid.values.assign(grid.points() * grid.payload_names.size(), 0.0);
        parallel_for(grid.points(), opt.threads, [&](std::size_t i) {
            const auto coords = grid.coordinates(i);
            const SecondMoments M = oriented_moments(config, mode, coords[0], coords[1]);
            const RegimeResult res = classify_regime(M, u, 1.0);
            grid.at(i, 0) = res.x_min;
            grid.at(i, 1) = res.delta;
            grid.at(i, 2) = regime_code(res.regime);
        });
    } else {
        if (!block.contains("lambda_over_z0") || block["lambda_over_z0"].is_number())
            throw ConfigError("xmin_map: envelope mode needs a 'lambda_over_z0' axis");
        const Axis l_axis = parse_axis(block["lambda_over_z0"], "lambda_over_z0",
                                       "xmin_map.lambda_over_z0");
        const int samples = optional_int(block, "orientation_samples", 96, "xmin_map");
        const int bins = optional_int(block, "coverage_bins", 100, "xmin_map");
        if (samples < 4 || bins < 2)
            throw ConfigError("xmin_map: orientation_samples >= 4, coverage_bins >= 2");
        grid.axes = {l_axis};
        grid.payload_names = {"beta", "coverage_fraction"};
        grid.values.assign(grid.points() * grid.payload_names.size(), 0.0);
        parallel_for(grid.points(), opt.threads, [&](std::size_t i) {
            const double u = 2.0 * kPi / l_axis.value(static_cast<int>(i));
            double beta = 0.0;
            std::vector<char> hit(static_cast<std::size_t>(bins), 0);
            for (int a = 0; a < samples; ++a) {
                const double phi = 2.0 * kPi * a / samples;
                for (int b = 0; b <= samples / 2; ++b) {
                    const double theta = kPi * b / (samples / 2);
                    const SecondMoments M =
                        oriented_moments(config, mode, phi, theta);
                    const RegimeResult res = classify_regime(M, u, 1.0);
                    if (res.regime == Regime::Null) continue;
                    const double x = res.x_min;
                    beta = std::max(beta, std::min(x, 1.0 - x));
                    int bin = static_cast<int>(x * bins);
                    if (bin >= bins) bin = bins - 1;
                    hit[static_cast<std::size_t>(bin)] = 1;
                }
            }
            grid.at(i, 0) = beta;
            grid.at(i, 1) =
                static_cast<double>(std::count(hit.begin(), hit.end(), char(1))) / bins;
        });
    }
    stamp_meta(grid, config, "xmin_map");
    return grid;
}

SweepGrid run_transition(const nlohmann::json& config, const Options& opt) {
    const Mode mode = parse_mode(config);
    const auto& block = command_block(config, "transition");
    check_keys(block, {"aspects", "phi"}, "transition");
    if (!block.contains("aspects") || !block["aspects"].is_array())
        throw ConfigError("transition: needs an 'aspects' array");
    const std::vector<double> aspects = block["aspects"].get<std::vector<double>>();
    if (aspects.empty()) throw ConfigError("transition: aspects is empty");
    const double phi =
        block.contains("phi") ? parse_angle(block["phi"], "transition.phi") : 0.0;

    LorentzOscillator material = kDiamond;
    if (mode == Mode::Quantum && config.contains("particle")) {
        const SpheroidParticle p = parse_particle(config);
        material = p.material;
    }

    SweepGrid grid;
    grid.axes = {Axis{"aspect_index", 0.0, double(aspects.size() - 1),
                      int(aspects.size()), Axis::Scale::Linear}};
    grid.payload_names = {"aspect", "g_lambda_over_z0"};
    grid.values.assign(grid.points() * grid.payload_names.size(), 0.0);
    parallel_for(grid.points(), opt.threads, [&](std::size_t i) {
        grid.at(i, 0) = aspects[i];
        if (mode == Mode::Classical) {
            // The classical border does not depend on any particle shape.
            grid.at(i, 1) = classical_border_lambda_over_z0(phi);
        } else if (phi == 0.0) {
            grid.at(i, 1) = transition_g(aspects[i], material);
        } else {
            grid.at(i, 1) = border_phi(aspects[i], material, phi);
        }
    });
    stamp_meta(grid, config, "transition");
    return grid;
}

SweepGrid run_frequency(const nlohmann::json& config, const Options& opt) {
    const Mode mode = parse_mode(config);
    if (mode != Mode::Quantum)
        throw ConfigError("frequency: only the quantum mode has a mass scale");
    const auto& block = command_block(config, "frequency");
    check_keys(block, {"z0_m"}, "frequency");
    if (!block.contains("z0_m"))
        throw ConfigError("frequency: needs a 'z0_m' axis");
    const Axis z_axis = parse_axis(block["z0_m"], "z0_m", "frequency.z0_m");

    const Geometry geom = parse_geometry(config, opt);
    const SpheroidParticle particle = parse_particle(config);
    if (!(particle.mass() > 0.0))
        throw ConfigError("frequency: particle needs density_kg_m3 (or a catalog "
                          "material) to define the mass");

    auto freq_at = [&](double z0) {
        CpScenario sc{particle, geom};
        sc.geom.z0 = z0;
        sc.geom.validate();
        try {
            return oscillation_frequency(sc);
        } catch (const NullAmplitude&) {
            return 0.0;
        }
    };

    SweepGrid grid;
    grid.axes = {z_axis};
    grid.payload_names = {"f_Hz", "regime"};
    grid.values.assign(grid.points() * grid.payload_names.size(), 0.0);
    parallel_for(grid.points(), opt.threads, [&](std::size_t i) {
        const double z0 = z_axis.value(static_cast<int>(i));
        grid.at(i, 0) = freq_at(z0);
        const RegimeResult res =
            classify_regime(moment_matrix(particle), 2.0 * kPi * z0 / geom.lambda,
                            geom.lambda);
        grid.at(i, 1) = regime_code(res.regime);
    });

    // Locate the null point and the valley-side maximum for the report meta.
    try {
        const double znull = null_z0(particle, geom.lambda);
        grid.meta["null_z0_m"] = format_double(znull);
        if (znull < z_axis.stop) {
            double lo = znull, hi = z_axis.stop;
            // Golden-section on the unimodal valley branch.
            const double gr = 0.61803398874989485;
            double a = lo, b = hi;
            double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
            for (int it = 0; it < 120; ++it) {
                if (freq_at(c1) < freq_at(c2)) {
                    a = c1;
                } else {
                    b = c2;
                }
                c1 = b - gr * (b - a);
                c2 = a + gr * (b - a);
            }
            const double zmax = 0.5 * (a + b);
            grid.meta["valley_max_z0_m"] = format_double(zmax);
            grid.meta["valley_max_f_Hz"] = format_double(freq_at(zmax));
        }
    } catch (const NoSignChange&) {
        // No null point in this scenario; meta entries stay absent.
    }
    stamp_meta(grid, config, "frequency");
    return grid;
}

SweepGrid run_oracle_check(const nlohmann::json& config, const Options& opt) {
    const Mode mode = parse_mode(config);
    const auto& block = command_block(config, "oracle_check");
    check_keys(block, {"lambda_over_z0_list", "orientations", "rel_accuracy"},
               "oracle_check");
    if (!block.contains("lambda_over_z0_list") ||
        !block["lambda_over_z0_list"].is_array())
        throw ConfigError("oracle_check: needs 'lambda_over_z0_list'");
    const std::vector<double> ratios =
        block["lambda_over_z0_list"].get<std::vector<double>>();
    if (!block.contains("orientations") || !block["orientations"].is_array())
        throw ConfigError("oracle_check: needs 'orientations' array of {phi, theta}");
    std::vector<OrientationSpec> orientations;
    for (const auto& o : block["orientations"]) {
        check_keys(o, {"phi", "theta"}, "oracle_check.orientations");
        orientations.push_back({parse_angle(o.at("phi"), "oracle_check.phi"),
                                parse_angle(o.at("theta"), "oracle_check.theta")});
    }
    if (ratios.empty() || orientations.empty())
        throw ConfigError("oracle_check: empty sweep");
    const double rel_accuracy =
        block.contains("rel_accuracy") ? block["rel_accuracy"].get<double>() : 1e-7;

    const Geometry geom = parse_geometry(config, opt);

    SweepGrid grid;
    grid.axes = {Axis{"case_index", 0.0, double(ratios.size() * orientations.size() - 1),
                      int(ratios.size() * orientations.size()), Axis::Scale::Linear}};
    grid.payload_names = {"lambda_over_z0", "phi_rad", "theta_rad", "u1_analytic_J",
                          "u1_oracle_J", "rel_diff"};
    grid.values.assign(grid.points() * grid.payload_names.size(), 0.0);
    parallel_for(grid.points(), opt.threads, [&](std::size_t i) {
        const std::size_t r = i / orientations.size();
        const std::size_t o = i % orientations.size();
        const SecondMoments M =
            oriented_moments(config, mode, orientations[o].phi, orientations[o].theta);
        Geometry g = geom;
        g.lambda = ratios[r] * g.z0;
        g.validate();
        const RoughnessProfile profile = RoughnessProfile::from_modes(
            {CosineMode{g.amplitude, {g.k(), 0.0}, 0.0}});
        const double analytic = u1_classical_sinusoid(M, g);
        const double oracle =
            oracle_u1_realspace(M, profile, g.z0, g.x0, 0.0, rel_accuracy);
        grid.at(i, 0) = ratios[r];
        grid.at(i, 1) = orientations[o].phi;
        grid.at(i, 2) = orientations[o].theta;
        grid.at(i, 3) = analytic;
        grid.at(i, 4) = oracle;
        grid.at(i, 5) = std::abs(oracle - analytic) /
                        std::max(std::abs(analytic), 1e-300);
    });
    stamp_meta(grid, config, "oracle_check");
    return grid;
}

void emit(const SweepGrid& grid, const Options& opt, std::ostream& out) {
    if (opt.format == "csv") {
        grid.to_csv(out);
    } else if (opt.format == "json") {
        out << grid.to_json().dump(2) << "\n";
    } else {
        throw ConfigError("output format must be 'csv' or 'json', got '" +
                          opt.format + "'");
    }
}

int dispatch(const std::string& command, const nlohmann::json& config,
             const Options& opt, std::ostream& out, std::string* error) {
    try {
        SweepGrid grid;
        if (command == "energy")
            grid = run_energy(config, opt);
        else if (command == "regime-map")
            grid = run_regime_map(config, opt);
        else if (command == "xmin-map")
            grid = run_xmin_map(config, opt);
        else if (command == "transition")
            grid = run_transition(config, opt);
        else if (command == "frequency")
            grid = run_frequency(config, opt);
        else if (command == "oracle-check")
            grid = run_oracle_check(config, opt);
        else
            throw ConfigError("unknown subcommand '" + command + "'");
        emit(grid, opt, out);
        return 0;
    } catch (const ConfigError& e) {
        if (error) *error = e.what();
        return 2;
    } catch (const DomainError& e) {
        if (error) *error = e.what();
        return 2;
    } catch (const PerturbativityViolation& e) {
        if (error) *error = e.what();
        return 4;
    } catch (const ConvergenceError& e) {
        if (error) *error = e.what();
        return 3;
    } catch (const NoSignChange& e) {
        if (error) *error = e.what();
        return 3;
    } catch (const NullAmplitude& e) {
        if (error) *error = e.what();
        return 3;
    } catch (const std::exception& e) {
        if (error) *error = e.what();
        return 1;
    }
}

} // namespace corrlat::cli
