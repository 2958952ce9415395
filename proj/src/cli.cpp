#include "qvac/cli.hpp"

#include "qvac/cavity.hpp"
#include "qvac/conformal_algebra.hpp"
#include "qvac/errors.hpp"
#include "qvac/gravity.hpp"
#include "qvac/measurement.hpp"
#include "qvac/mirror_dynamics.hpp"
#include "qvac/spectra.hpp"
#include "qvac/worldline.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <optional>
#include <sstream>

namespace qvac::cli {

namespace {

constexpr double pi = std::numbers::pi;

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

std::array<double, 4> parse_four_vector(const std::string& spec) {
    std::array<double, 4> out{};
    std::stringstream ss(spec);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 4)
            throw invalid_input("four-vector needs exactly 4 comma-separated components: " + spec);
        try {
            out[i++] = std::stod(item);
        } catch (const std::exception&) {
            throw invalid_input("bad four-vector component: " + item);
        }
    }
    if (i != 4)
        throw invalid_input("four-vector needs exactly 4 comma-separated components: " + spec);
    return out;
}

std::map<std::string, std::string> base_meta(const RunConfig& config) {
    std::map<std::string, std::string> meta;
    meta["subcommand"] = config.subcommand;
    meta["units"] = to_string(config.units);
    meta["version"] = tool_version;
    for (const auto& [k, v] : config.numbers)
        meta["param." + k] = format_number(v);
    for (const auto& [k, v] : config.strings)
        meta["param." + k] = v;
    return meta;
}

SweepResult run_spectrum(const RunConfig& config) {
    const auto grid = parse_range(config.text("omega"));
    const std::string& kind = config.text("kind");
    const UnitSystem units = config.units;
    SweepResult out;
    out.meta = base_meta(config);
    if (kind == "force-perfect") {
        out.columns = {"omega", "c_ff"};
        for (double w : grid.points())
            out.rows.push_back({w, spectra::force_spectrum_perfect_mirror(w, units)});
    } else if (kind == "momentum") {
        out.columns = {"omega", "c_pp"};
        for (double w : grid.points())
            out.rows.push_back({w, spectra::momentum_density_spectrum(w, units)});
    } else if (kind == "thermal-force") {
        const double beta = config.number("beta");
        const double hb = hbar(units);
        const double c = light_speed(units);
        const auto xi = spectra::evaluate_on_grid(
            grid, [&](double w) { return hb / (6.0 * pi * c * c) * w * w * w; }, units);
        const auto thermal = spectra::thermal_fd(xi, spectra::ThermalState(beta));
        out.columns = {"omega", "c_ff"};
        for (std::size_t i = 0; i < grid.size(); ++i)
            out.rows.push_back({grid[i], thermal.values[i].real()});
    } else if (kind == "vacuum-force") {
        const double hb = hbar(units);
        const double c = light_speed(units);
        const auto xi = spectra::evaluate_on_grid(
            grid, [&](double w) { return hb / (6.0 * pi * c * c) * w * w * w; }, units);
        const auto [cs, sigma] = spectra::vacuum_fd(xi);
        out.columns = {"omega", "c_ff", "sigma_ff"};
        for (std::size_t i = 0; i < grid.size(); ++i)
            out.rows.push_back({grid[i], cs.values[i].real(), sigma.values[i].real()});
    } else {
        throw invalid_input("unknown spectrum kind: " + kind);
    }
    return out;
}

SweepResult run_trajectory(const RunConfig& config) {
    const auto grid = parse_range(config.text("tau"));
    const std::string& kind = config.text("worldline");
    worldline::Worldline line = [&] {
        if (kind == "rest")
            return worldline::rest_worldline();
        if (kind == "velocity")
            return worldline::uniform_velocity_worldline({config.number("velocity"), 0.0, 0.0});
        if (kind == "hyperbolic")
            return worldline::hyperbolic_worldline(config.number("accel"));
        if (kind == "sinusoid")
            return worldline::sinusoid_worldline(config.number("amplitude"),
                                                 config.number("drive-freq"));
        throw invalid_input("unknown worldline kind: " + kind);
    }();
    if (config.has("map")) {
        const auto a = parse_four_vector(config.text("map"));
        line = worldline::map_worldline(
            line, worldline::FourVector{a, worldline::IndexPosition::contravariant});
    }
    SweepResult out;
    out.meta = base_meta(config);
    out.columns = {"lambda", "x0", "x1", "x2", "x3"};
    for (double lam : grid.points()) {
        const auto x = line.position(lam);
        out.rows.push_back({lam, x[0], x[1], x[2], x[3]});
    }
    return out;
}

SweepResult run_algebra(const RunConfig& config) {
    const auto report = conformal::check_structure_constants();
    SweepResult out;
    out.meta = base_meta(config);
    out.meta["convention"] = report.convention;
    out.meta["passed"] = std::to_string(report.passed);
    out.meta["total"] = std::to_string(report.total);
    out.columns = {"bracket", "expected", "computed", "status"};
    for (const auto& row : report.brackets)
        out.rows.push_back({row.name, row.expected, row.computed,
                            std::string(row.pass ? "pass" : "fail")});
    return out;
}

std::optional<mirror::ForceSusceptibilityModel> force_model_from(const RunConfig& config) {
    const std::string& model = config.text("model");
    if (model == "perfect")
        return mirror::ForceSusceptibilityModel::perfect();
    if (model == "cutoff")
        return mirror::ForceSusceptibilityModel::with_cutoff(config.number("cutoff"));
    if (model == "none")
        return std::nullopt;
    throw invalid_input("unknown force model: " + model);
}

SweepResult run_mirror(const RunConfig& config) {
    const auto model = force_model_from(config);
    const UnitSystem units = config.units;
    SweepResult out;
    out.meta = base_meta(config);
    if (config.has("causality")) {
        const auto grid = parse_range(config.text("omega"));
        const auto report = mirror::causality_check(model, grid, units);
        out.columns = {"model", "causal", "max_rel_discrepancy", "note"};
        out.rows.push_back({report.model, std::string(report.causal ? "true" : "false"),
                            report.max_rel_discrepancy, report.note});
        return out;
    }
    const mirror::OscillatorModel osc(config.number("mass"), config.number("omega0"));
    const auto grid = parse_range(config.text("omega"));
    const auto spectrum = mirror::langevin_position_spectrum(osc, model, grid, units);
    out.columns = {"omega", "re_chi_ff", "im_chi_ff", "re_chi_qq", "im_chi_qq", "c_qq"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = grid[i];
        const std::complex<double> ff =
            model ? mirror::chi_ff(*model, w, units) : std::complex<double>(0.0);
        const std::complex<double> qq = mirror::chi_qq(osc, model, w, units);
        out.rows.push_back(
            {w, ff.real(), ff.imag(), qq.real(), qq.imag(), spectrum.values[i].real()});
    }
    return out;
}

SweepResult run_cavity(const RunConfig& config) {
    const cavity::Cavity cav(config.number("r1"), config.number("r2"), config.number("length"),
                             config.units);
    const int n = static_cast<int>(config.number("n"));
    const double omega =
        config.has("freq") ? config.number("freq") : n * pi / cav.tau;
    const cavity::MotionSpec motion(cavity::motion_mode_from_string(config.text("mode")), omega,
                                    config.number("amp"), config.number("duration"),
                                    config.units);
    const double photons = cavity::radiated_photons(cav, motion, config.units);
    const auto resonance = cavity::matched_resonance(cav, motion);
    SweepResult out;
    out.meta = base_meta(config);
    out.columns = {"n_photons", "finesse", "resonance_index", "parity"};
    out.rows.push_back({photons, cav.finesse, static_cast<double>(resonance.n),
                        std::string(resonance.even ? "even" : "odd")});
    return out;
}

SweepResult run_measure(const RunConfig& config) {
    const measurement::MechanicalSusceptibility mech(
        config.number("mass"), config.number("omega0"), config.number("gamma"));
    const auto grid = parse_range(config.text("omega"));
    const UnitSystem units = config.units;
    SweepResult out;
    out.meta = base_meta(config);
    out.columns = {"omega", "sql", "uql", "optimized_noise"};
    for (double w : grid.points()) {
        const auto probe = measurement::optimize_probe(mech, w, units);
        out.rows.push_back({w, measurement::sql_bound(mech, w, units),
                            measurement::uql_bound(mech, w, units),
                            measurement::measured_position_noise(probe, mech, w, units)});
    }
    return out;
}

SweepResult run_gravity(const RunConfig& config) {
    const double mass = config.number("mass");
    const auto grid = parse_range(config.text("omega"));
    const UnitSystem units = config.units;
    SweepResult out;
    out.meta = base_meta(config);
    out.columns = {"omega", "compton_noise", "planck_noise", "dominant_regime"};
    for (double w : grid.points()) {
        const double compton = mirror::compton_background(mass, w, units);
        const double planck = gravity::geodesic_noise(w, units);
        // in natural (Planck) units the crossover mass is 1 by construction
        gravity::Regime regime;
        if (units == UnitSystem::si) {
            regime = gravity::regime_classifier(mass);
        } else if (std::abs(mass - 1.0) <= 1e-6) {
            regime = gravity::Regime::crossover;
        } else {
            regime = mass < 1.0 ? gravity::Regime::compton_dominated
                                : gravity::Regime::planck_dominated;
        }
        out.rows.push_back({w, compton, planck, std::string(gravity::to_string(regime))});
    }
    return out;
}

void emit_csv(const SweepResult& result, std::ostream& sink) {
    for (std::size_t i = 0; i < result.columns.size(); ++i)
        sink << (i ? "," : "") << result.columns[i];
    sink << "\n";
    for (const auto& row : result.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                sink << ",";
            if (std::holds_alternative<double>(row[i]))
                sink << format_number(std::get<double>(row[i]));
            else
                sink << std::get<std::string>(row[i]);
        }
        sink << "\n";
    }
}

void emit_json(const SweepResult& result, std::ostream& sink) {
    nlohmann::json doc;
    doc["meta"] = result.meta;
    doc["columns"] = result.columns;
    auto rows = nlohmann::json::array();
    for (const auto& row : result.rows) {
        auto jrow = nlohmann::json::array();
        for (const auto& cell : row) {
            if (std::holds_alternative<double>(cell))
                jrow.push_back(std::get<double>(cell));
            else
                jrow.push_back(std::get<std::string>(cell));
        }
        rows.push_back(std::move(jrow));
    }
    doc["rows"] = std::move(rows);
    sink << doc.dump(2) << "\n";
}

} // namespace

double RunConfig::number(const std::string& key) const {
    const auto it = numbers.find(key);
    if (it == numbers.end())
        throw invalid_input("missing required numeric flag --" + key);
    return it->second;
}

const std::string& RunConfig::text(const std::string& key) const {
    const auto it = strings.find(key);
    if (it == strings.end())
        throw invalid_input("missing required flag --" + key);
    return it->second;
}

bool RunConfig::has(const std::string& key) const {
    return numbers.count(key) > 0 || strings.count(key) > 0;
}

spectra::FrequencyGrid parse_range(const std::string& spec) {
    std::string body = spec;
    bool logarithmic = false;
    if (body.rfind("log:", 0) == 0) {
        logarithmic = true;
        body = body.substr(4);
    }
    std::array<std::string, 3> fields;
    std::stringstream ss(body);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ':')) {
        if (i >= 3)
            throw invalid_input("range must be start:stop:count, got: " + spec);
        fields[i++] = item;
    }
    if (i != 3)
        throw invalid_input("range must be start:stop:count, got: " + spec);
    double start = 0.0, stop = 0.0;
    long count = 0;
    try {
        start = std::stod(fields[0]);
        stop = std::stod(fields[1]);
        count = std::stol(fields[2]);
    } catch (const std::exception&) {
        throw invalid_input("malformed range: " + spec);
    }
    if (count < 1)
        throw invalid_input("range count must be at least 1");
    return logarithmic ? spectra::FrequencyGrid::logspace(start, stop, static_cast<std::size_t>(count))
                       : spectra::FrequencyGrid::linear(start, stop, static_cast<std::size_t>(count));
}

RunConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"quantum vacuum fluctuation toolkit"};
    app.require_subcommand(1);

    struct Bound {
        std::string units = "natural";
        std::string format;
        std::string output;
    };
    std::map<std::string, Bound> bound;
    std::map<std::string, std::map<std::string, double>> numbers;
    std::map<std::string, std::map<std::string, std::string>> strings;

    auto add_common = [&](CLI::App* sub, const std::string& name,
                          const std::string& default_format) {
        auto& b = bound[name];
        b.format = default_format;
        sub->add_option("--units", b.units, "unit system: natural or si")
            ->check(CLI::IsMember({"natural", "si"}));
        sub->add_option("--format", b.format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", b.output, "output file (default: stdout)");
    };
    auto add_number = [&](CLI::App* sub, const std::string& cmd, const std::string& flag,
                          const std::string& help, bool required = true) {
        auto* opt = sub->add_option_function<double>(
            "--" + flag, [&numbers, cmd, flag](double v) { numbers[cmd][flag] = v; }, help);
        if (required)
            opt->required();
    };
    auto add_string = [&](CLI::App* sub, const std::string& cmd, const std::string& flag,
                          const std::string& help, bool required = true,
                          const std::vector<std::string>& choices = {}) {
        auto* opt = sub->add_option_function<std::string>(
            "--" + flag, [&strings, cmd, flag](std::string v) { strings[cmd][flag] = std::move(v); },
            help);
        if (required)
            opt->required();
        if (!choices.empty())
            opt->check(CLI::IsMember(choices));
    };

    auto* spectrum = app.add_subcommand("spectrum", "vacuum and thermal correlation spectra");
    add_common(spectrum, "spectrum", "csv");
    add_string(spectrum, "spectrum", "kind", "force-perfect | momentum | thermal-force | vacuum-force",
               true, {"force-perfect", "momentum", "thermal-force", "vacuum-force"});
    add_string(spectrum, "spectrum", "omega", "frequency grid start:stop:count (log: prefix allowed)");
    add_number(spectrum, "spectrum", "beta", "inverse temperature (thermal-force)", false);

    auto* trajectory = app.add_subcommand("trajectory", "relativistic worldline sampling");
    add_common(trajectory, "trajectory", "csv");
    add_string(trajectory, "trajectory", "worldline", "rest | velocity | hyperbolic | sinusoid",
               true, {"rest", "velocity", "hyperbolic", "sinusoid"});
    add_string(trajectory, "trajectory", "tau", "parameter grid start:stop:count");
    add_number(trajectory, "trajectory", "velocity", "uniform velocity (velocity worldline)", false);
    add_number(trajectory, "trajectory", "accel", "proper acceleration (hyperbolic worldline)", false);
    add_number(trajectory, "trajectory", "amplitude", "oscillation amplitude (sinusoid)", false);
    add_number(trajectory, "trajectory", "drive-freq", "oscillation frequency (sinusoid)", false);
    add_string(trajectory, "trajectory", "map", "conformal acceleration a0,a1,a2,a3", false);

    auto* algebra = app.add_subcommand("algebra", "conformal algebra structure-constant check");
    add_common(algebra, "algebra", "json");

    auto* mirror_cmd = app.add_subcommand("mirror", "vacuum-driven mirror dynamics");
    add_common(mirror_cmd, "mirror", "csv");
    add_string(mirror_cmd, "mirror", "model", "perfect | cutoff | none", true,
               {"perfect", "cutoff", "none"});
    add_number(mirror_cmd, "mirror", "cutoff", "reflection cutoff frequency", false);
    add_number(mirror_cmd, "mirror", "mass", "oscillator mass", false);
    add_number(mirror_cmd, "mirror", "omega0", "oscillator proper frequency", false);
    add_string(mirror_cmd, "mirror", "omega", "frequency grid start:stop:count");
    mirror_cmd->add_flag_function(
        "--causality",
        [&strings](std::int64_t) { strings["mirror"]["causality"] = "true"; },
        "run the dispersion-relation check instead of the noise sweep");

    auto* cavity_cmd = app.add_subcommand("cavity", "motional radiation from a Fabry-Perot cavity");
    add_common(cavity_cmd, "cavity", "json");
    add_number(cavity_cmd, "cavity", "r1", "amplitude reflectivity of mirror 1");
    add_number(cavity_cmd, "cavity", "r2", "amplitude reflectivity of mirror 2");
    add_number(cavity_cmd, "cavity", "length", "cavity length");
    add_string(cavity_cmd, "cavity", "mode", "elongation | translation", true,
               {"elongation", "translation"});
    add_number(cavity_cmd, "cavity", "n", "resonance index (>= 2)");
    add_number(cavity_cmd, "cavity", "amp", "drive amplitude");
    add_number(cavity_cmd, "cavity", "duration", "drive duration");
    add_number(cavity_cmd, "cavity", "freq", "drive frequency override", false);

    auto* measure = app.add_subcommand("measure", "position measurement quantum limits");
    add_common(measure, "measure", "csv");
    add_number(measure, "measure", "mass", "mirror mass");
    add_number(measure, "measure", "omega0", "suspension frequency");
    add_number(measure, "measure", "gamma", "damping coefficient");
    add_string(measure, "measure", "omega", "frequency grid start:stop:count");

    auto* gravity_cmd = app.add_subcommand("gravity", "Compton vs Planck position noise");
    add_common(gravity_cmd, "gravity", "csv");
    add_number(gravity_cmd, "gravity", "mass", "test mass (kg in si, Planck masses in natural)");
    add_string(gravity_cmd, "gravity", "omega", "frequency grid start:stop:count");

    if (args.empty())
        throw invalid_input(app.help());

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw help_requested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw help_requested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw invalid_input(std::string(e.what()));
    }

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    RunConfig config;
    config.subcommand = name;
    config.units = unit_system_from_string(bound[name].units);
    const std::string& fmt = bound[name].format;
    if (fmt == "csv")
        config.format = OutputFormat::csv;
    else if (fmt == "json")
        config.format = OutputFormat::json;
    else
        throw invalid_input("unknown output format: " + fmt);
    config.output_path = bound[name].output;
    config.numbers = numbers[name];
    config.strings = strings[name];

    // validate grids and cross-flag requirements up front
    if (config.has("omega"))
        (void)parse_range(config.text("omega"));
    if (config.has("tau"))
        (void)parse_range(config.text("tau"));
    if (name == "spectrum" && config.text("kind") == "thermal-force" && !config.has("beta"))
        throw invalid_input("--kind thermal-force requires --beta");
    if (name == "mirror") {
        if (config.text("model") == "cutoff" && !config.has("cutoff"))
            throw invalid_input("--model cutoff requires --cutoff");
        if (!config.has("causality") && (!config.has("mass") || !config.has("omega0")))
            throw invalid_input("mirror noise sweep requires --mass and --omega0");
    }
    if (name == "trajectory") {
        const std::string& kind = config.text("worldline");
        if (kind == "velocity" && !config.has("velocity"))
            throw invalid_input("--worldline velocity requires --velocity");
        if (kind == "hyperbolic" && !config.has("accel"))
            throw invalid_input("--worldline hyperbolic requires --accel");
        if (kind == "sinusoid" && (!config.has("amplitude") || !config.has("drive-freq")))
            throw invalid_input("--worldline sinusoid requires --amplitude and --drive-freq");
        if (config.has("map"))
            (void)parse_four_vector(config.text("map"));
    }
    if (name == "cavity") {
        if (config.number("n") < 2 || config.number("n") != std::floor(config.number("n")))
            throw invalid_input("--n must be an integer >= 2");
    }
    return config;
}

SweepResult run(const RunConfig& config) {
    if (config.subcommand == "spectrum")
        return run_spectrum(config);
    if (config.subcommand == "trajectory")
        return run_trajectory(config);
    if (config.subcommand == "algebra")
        return run_algebra(config);
    if (config.subcommand == "mirror")
        return run_mirror(config);
    if (config.subcommand == "cavity")
        return run_cavity(config);
    if (config.subcommand == "measure")
        return run_measure(config);
    if (config.subcommand == "gravity")
        return run_gravity(config);
    throw invalid_input("unknown subcommand: " + config.subcommand);
}

void emit(const SweepResult& result, OutputFormat format, std::ostream& sink) {
    for (const auto& row : result.rows)
        if (row.size() != result.columns.size())
            throw invalid_input("sweep rows must be rectangular");
    if (format == OutputFormat::csv)
        emit_csv(result, sink);
    else
        emit_json(result, sink);
    if (!sink)
        throw io_error("failed writing output");
}

int main_entry(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    try {
        const RunConfig config = parse_config(args);
        const SweepResult result = run(config);
        if (config.output_path.empty()) {
            emit(result, config.format, std::cout);
            std::cout.flush();
            if (!std::cout)
                throw io_error("failed writing to stdout");
        } else {
            std::ofstream file(config.output_path);
            if (!file)
                throw io_error("cannot open output file: " + config.output_path);
            emit(result, config.format, file);
            file.flush();
            if (!file)
                throw io_error("failed writing output file: " + config.output_path);
        }
        return 0;
    } catch (const help_requested& help) {
        std::cout << help.text;
        return 0;
    } catch (const invalid_input& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const singularity_error& e) {
        std::cerr << "singularity error: " << e.what() << "\n";
        return 4;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 5;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace qvac::cli
