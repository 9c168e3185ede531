#include "dispz/units.hpp"

#include <cctype>
#include <cmath>
#include <map>

#include "dispz/constants.hpp"
#include "dispz/errors.hpp"
#include "dispz/tolerances.hpp"

namespace dispz {

double angular_from_hz(double f_hz) {
    if (!std::isfinite(f_hz)) throw InvalidInputError("frequency must be finite");
    return constants::two_pi * f_hz;
}

double hz_from_angular(double omega) {
    if (!std::isfinite(omega)) throw InvalidInputError("frequency must be finite");
    return omega / constants::two_pi;
}

double charging_energy_hz(double c_farad) {
    if (!(c_farad > 0.0)) throw InvalidInputError("capacitance must be positive");
    const double e = constants::elementary_charge;
    return e * e / (2.0 * c_farad * constants::planck);
}

double charging_energy_rad(double c_farad) {
    return constants::two_pi * charging_energy_hz(c_farad);
}

double parse_quantity(const std::string& text) {
    static const std::map<std::string, double> scale = {
        {"F", 1.0},   {"fF", 1e-15}, {"pF", 1e-12},
        {"H", 1.0},   {"nH", 1e-9},  {"pH", 1e-12},
        {"Hz", 1.0},  {"GHz", 1e9},
        {"Ohm", 1.0},
    };
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ParseError("cannot parse quantity '" + text + "'");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string unit = text.substr(pos);
    if (unit.empty()) return value;
    auto it = scale.find(unit);
    if (it == scale.end())
        throw ParseError("unknown unit suffix '" + unit + "' in '" + text + "'");
    return value * it->second;
}

Tolerances tolerance_profile(const std::string& name) {
    Tolerances t;
    if (name == "default" || name.empty()) return t;
    if (name == "strict") {
        t.rank1_tol = 1e-10;
        t.symmetry_tol = 1e-13;
        t.dispersive_error_ratio = 5.0;
        t.dispersive_warn_ratio = 20.0;
        return t;
    }
    if (name == "loose") {
        t.rank1_tol = 1e-6;
        t.pole_merge_tol = 1e-5;
        t.dispersive_error_ratio = 2.0;
        t.dispersive_warn_ratio = 5.0;
        return t;
    }
    throw InvalidInputError("unknown tolerance profile '" + name + "'");
}

}  // namespace dispz
