#pragma once

#include "qvac/spectra.hpp"
#include "qvac/units.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace qvac::cli {

inline constexpr const char* tool_version = "0.1.0";

enum class OutputFormat { csv, json };

/// Fully validated description of one run. Every run is reproducible from its
/// command line; there is no config file.
struct RunConfig {
    std::string subcommand;
    UnitSystem units = UnitSystem::natural;
    OutputFormat format = OutputFormat::csv;
    std::string output_path; // empty means stdout
    std::map<std::string, double> numbers;
    std::map<std::string, std::string> strings;

    double number(const std::string& key) const;
    const std::string& text(const std::string& key) const;
    bool has(const std::string& key) const;
};

using Cell = std::variant<double, std::string>;

/// Rectangular sweep output plus a metadata block that round-trips through
/// the JSON emitter.
struct SweepResult {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::map<std::string, std::string> meta;
};

/// Raised for --help; the caller prints the text and exits cleanly.
struct help_requested {
    std::string text;
};

/// Parses "start:stop:count" (linear) or "log:start:stop:count" grids.
spectra::FrequencyGrid parse_range(const std::string& spec);

/// Parses and validates a command line (without the program name). Unknown
/// flags, missing required flags and malformed values raise invalid_input
/// with a usage message; --help raises help_requested.
RunConfig parse_config(const std::vector<std::string>& args);

/// Executes a validated config. Deterministic: identical configs produce
/// identical results.
SweepResult run(const RunConfig& config);

/// Serializes a result. CSV: header row then data rows, 12 significant
/// digits, '.' decimal separator. JSON: {"meta": {...}, "columns": [...],
/// "rows": [[...]]}. Identical input gives byte-identical output.
void emit(const SweepResult& result, OutputFormat format, std::ostream& sink);

/// Full process entry point: parse, run, emit, map errors to exit codes
/// (0 success, 2 usage, 3 domain, 4 singularity, 5 I/O).
int main_entry(int argc, const char* const* argv);

} // namespace qvac::cli
