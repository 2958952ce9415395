#include "qvac/units.hpp"

#include "qvac/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>

namespace qvac {

Codata load_codata_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open constants file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input("constants file " + path + " is not valid JSON: " + e.what());
    }
    Codata c;
    auto get = [&](const char* key, double& slot) {
        if (j.contains(key)) {
            if (!j[key].is_number())
                throw invalid_input(std::string("constants key ") + key + " must be a number");
            slot = j[key].get<double>();
        }
    };
    get("hbar", c.hbar);
    get("c", c.c);
    get("k_B", c.k_B);
    get("G", c.G);
    get("m_e", c.m_e);
    return c;
}

const Codata& codata() {
    static const Codata active = [] {
        if (const char* path = std::getenv("QVAC_CODATA_FILE"))
            return load_codata_file(path);
        return Codata{};
    }();
    return active;
}

double hbar(UnitSystem u) { return u == UnitSystem::natural ? 1.0 : codata().hbar; }

double light_speed(UnitSystem u) { return u == UnitSystem::natural ? 1.0 : codata().c; }

const char* to_string(UnitSystem u) { return u == UnitSystem::natural ? "natural" : "si"; }

UnitSystem unit_system_from_string(const std::string& s) {
    if (s == "natural")
        return UnitSystem::natural;
    if (s == "si")
        return UnitSystem::si;
    throw invalid_input("unknown unit system: " + s + " (expected natural or si)");
}

} // namespace qvac
