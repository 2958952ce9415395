#pragma once

#include <string>

namespace qvac {

/// Unit system for all physics operations.
///
/// The core formulas are written in natural units (hbar = c = 1); selecting
/// UnitSystem::si multiplies in CODATA-2018 constants so that frequencies are
/// rad/s, masses kg, lengths m.
enum class UnitSystem { natural, si };

/// CODATA-2018 constants, 10 significant digits.
struct Codata {
    double hbar = 1.054571817e-34;   // J s
    double c = 2.997924580e8;        // m/s
    double k_B = 1.380649000e-23;    // J/K
    double G = 6.674300000e-11;      // m^3 kg^-1 s^-2
    double m_e = 9.109383702e-31;    // kg
};

/// Active constants. Honors the QVAC_CODATA_FILE environment variable once,
/// at first use: if set, it must name a JSON file with any subset of the keys
/// {"hbar","c","k_B","G","m_e"} (testing hook, not for production runs).
const Codata& codata();

/// Parses a constants-override file; throws io_error / invalid_input.
Codata load_codata_file(const std::string& path);

/// hbar in the requested system (1 or CODATA).
double hbar(UnitSystem u);
/// Speed of light in the requested system (1 or CODATA).
double light_speed(UnitSystem u);

const char* to_string(UnitSystem u);
UnitSystem unit_system_from_string(const std::string& s);

} // namespace qvac
