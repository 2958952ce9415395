#include "qvac/cli.hpp"

#include "qvac/errors.hpp"
#include "qvac/units.hpp"

#include <cmath>
#include <doctest.h>
#include <nlohmann/json.hpp>
#include <sstream>

using namespace qvac;
using namespace qvac::cli;

namespace {

std::string render(const SweepResult& result, OutputFormat format) {
    std::ostringstream os;
    emit(result, format, os);
    return os.str();
}

} // namespace

TEST_CASE("parse_range") {
    const auto lin = parse_range("0.1:10:100");
    CHECK(lin.size() == 100);
    CHECK(lin[0] == doctest::Approx(0.1));
    CHECK(lin[99] == doctest::Approx(10.0));
    CHECK(lin.spacing() == spectra::GridSpacing::linear);

    const auto log = parse_range("log:1e-3:1e3:200");
    CHECK(log.size() == 200);
    CHECK(log[0] == doctest::Approx(1e-3));
    CHECK(log[199] == doctest::Approx(1e3));
    CHECK(log.spacing() == spectra::GridSpacing::logarithmic);

    CHECK_THROWS_AS(parse_range("1:2"), invalid_input);
    CHECK_THROWS_AS(parse_range("1:2:3:4"), invalid_input);
    CHECK_THROWS_AS(parse_range("a:2:3"), invalid_input);
    CHECK_THROWS_AS(parse_range("1:2:0"), invalid_input);
}

TEST_CASE("parse_config") {
    SUBCASE("spectrum sweep example") {
        const auto config = parse_config(
            {"spectrum", "--kind", "force-perfect", "--omega", "0.1:10:100", "--units", "natural"});
        CHECK(config.subcommand == "spectrum");
        CHECK(config.units == UnitSystem::natural);
        CHECK(config.format == OutputFormat::csv);
        CHECK(config.text("kind") == "force-perfect");
        CHECK(config.text("omega") == "0.1:10:100");
    }

    SUBCASE("cavity example") {
        const auto config = parse_config({"cavity", "--r1", "0.999", "--r2", "0.999", "--length",
                                          "0.01", "--mode", "elongation", "--n", "2", "--amp",
                                          "1e-9", "--duration", "1"});
        CHECK(config.subcommand == "cavity");
        CHECK(config.number("r1") == 0.999);
        CHECK(config.number("n") == 2.0);
        CHECK(config.format == OutputFormat::json);
    }

    SUBCASE("empty argv raises a usage error") {
        CHECK_THROWS_AS(parse_config({}), invalid_input);
    }
    SUBCASE("unknown flags are rejected") {
        CHECK_THROWS_AS(parse_config({"spectrum", "--kind", "momentum", "--omega", "1:2:3",
                                      "--frobnicate", "7"}),
                        invalid_input);
    }
    SUBCASE("missing required flags are rejected with the flag name") {
        try {
            parse_config({"spectrum", "--kind", "momentum"});
            FAIL("expected a usage error");
        } catch (const invalid_input& e) {
            CHECK(std::string(e.what()).find("omega") != std::string::npos);
        }
    }
    SUBCASE("cross-flag requirements") {
        CHECK_THROWS_AS(
            parse_config({"spectrum", "--kind", "thermal-force", "--omega", "1:2:5"}),
            invalid_input);
        CHECK_THROWS_AS(
            parse_config({"mirror", "--model", "cutoff", "--omega", "1:2:5"}),
            invalid_input);
        CHECK_THROWS_AS(parse_config({"cavity", "--r1", "0.9", "--r2", "0.9", "--length", "1",
                                      "--mode", "elongation", "--n", "1", "--amp", "0",
                                      "--duration", "1"}),
                        invalid_input);
    }
    SUBCASE("--help is not an error") {
        CHECK_THROWS_AS(parse_config({"--help"}), help_requested);
    }
}

TEST_CASE("run + emit") {
    SUBCASE("csv emission uses 12 significant digits") {
        const auto config =
            parse_config({"spectrum", "--kind", "momentum", "--omega", "1:1:1"});
        const auto result = run(config);
        const std::string csv = render(result, OutputFormat::csv);
        CHECK(csv == "omega,c_pp\n1.00000000000e+00,2.65258238486e-02\n");
    }

    SUBCASE("single-row result is a 2-line csv") {
        const auto config = parse_config({"cavity", "--r1", "0.9", "--r2", "0.9", "--length", "1",
                                          "--mode", "elongation", "--n", "2", "--amp", "1e-6",
                                          "--duration", "10", "--format", "csv"});
        const std::string csv = render(run(config), OutputFormat::csv);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
    }

    SUBCASE("json round-trips") {
        const auto config = parse_config({"gravity", "--mass", "1e-3", "--omega", "1:10:4",
                                          "--units", "si", "--format", "json"});
        const auto result = run(config);
        const std::string text = render(result, OutputFormat::json);
        const auto doc = nlohmann::json::parse(text);
        CHECK(doc["meta"]["subcommand"] == "gravity");
        CHECK(doc["meta"]["units"] == "si");
        CHECK(doc["meta"]["version"] == tool_version);
        CHECK(doc["columns"].size() == 4);
        CHECK(doc["rows"].size() == 4);
        // numbers survive exactly, strings stay strings
        for (std::size_t i = 0; i < result.rows.size(); ++i) {
            CHECK(doc["rows"][i][1].get<double>() == std::get<double>(result.rows[i][1]));
            CHECK(doc["rows"][i][3].get<std::string>() == "planck-dominated");
        }
    }

    SUBCASE("identical configs give byte-identical output") {
        const std::vector<std::string> argv{"measure", "--mass", "1", "--omega0", "1", "--gamma",
                                            "0.01", "--omega", "0.5:1.5:20"};
        const std::string a = render(run(parse_config(argv)), OutputFormat::csv);
        const std::string b = render(run(parse_config(argv)), OutputFormat::csv);
        CHECK(a == b);
        CHECK(a.find("nan") == std::string::npos);
    }

    SUBCASE("measure sweep keeps sql >= uql on every row") {
        const auto result = run(parse_config(
            {"measure", "--mass", "1", "--omega0", "1", "--gamma", "0.05", "--omega", "0.2:3:40"}));
        for (const auto& row : result.rows) {
            const double sql = std::get<double>(row[1]);
            const double uql = std::get<double>(row[2]);
            const double opt = std::get<double>(row[3]);
            CHECK(uql <= sql * (1 + 1e-12));
            CHECK(opt <= sql * (1 + 1e-9));
        }
    }

    SUBCASE("algebra report has 105 passing brackets") {
        const auto result = run(parse_config({"algebra"}));
        CHECK(result.rows.size() == 105);
        CHECK(result.meta.at("passed") == "105");
        CHECK(result.meta.at("convention") == "(A,B) = AB - BA");
        for (const auto& row : result.rows)
            CHECK(std::get<std::string>(row[3]) == "pass");
    }

    SUBCASE("gravity in SI labels a one-gram mass planck-dominated") {
        const auto result = run(parse_config(
            {"gravity", "--mass", "1e-3", "--omega", "1:100:5", "--units", "si"}));
        for (const auto& row : result.rows)
            CHECK(std::get<std::string>(row[3]) == "planck-dominated");
    }

    SUBCASE("trajectory emits worldline columns") {
        const auto result = run(parse_config({"trajectory", "--worldline", "hyperbolic", "--accel",
                                              "2", "--tau", "0:1:5"}));
        CHECK(result.columns ==
              std::vector<std::string>{"lambda", "x0", "x1", "x2", "x3"});
        CHECK(result.rows.size() == 5);
        CHECK(std::get<double>(result.rows[0][2]) == doctest::Approx(0.5)); // cosh(0)/2
    }

    SUBCASE("natural and SI runs agree after external conversion") {
        const auto natural = run(parse_config(
            {"spectrum", "--kind", "force-perfect", "--omega", "0.5:100:30", "--units", "natural"}));
        const auto si = run(parse_config(
            {"spectrum", "--kind", "force-perfect", "--omega", "0.5:100:30", "--units", "si"}));
        const auto& cd = codata();
        const double factor = cd.hbar * cd.hbar / (cd.c * cd.c);
        for (std::size_t i = 0; i < natural.rows.size(); ++i) {
            const double n = std::get<double>(natural.rows[i][1]);
            const double s = std::get<double>(si.rows[i][1]);
            CHECK(s == doctest::Approx(n * factor).epsilon(1e-9));
        }
    }
}

TEST_CASE("mirror causality subcommand") {
    const auto result = run(parse_config({"mirror", "--model", "cutoff", "--cutoff", "1",
                                          "--omega", "log:1e-3:1e3:40", "--causality"}));
    CHECK(result.rows.size() == 1);
    CHECK(std::get<std::string>(result.rows[0][0]) == "cutoff");
    CHECK(std::get<std::string>(result.rows[0][1]) == "true");
    CHECK(std::get<double>(result.rows[0][2]) < 0.02);

    const auto perfect = run(parse_config(
        {"mirror", "--model", "perfect", "--omega", "log:1e-2:1e2:10", "--causality"}));
    CHECK(std::get<std::string>(perfect.rows[0][1]) == "false");
}
