#pragma once

#include <string>

namespace dispz {

/// Angular frequency in rad/s. All internal computations run in angular
/// frequency; linear Hz appears only at I/O boundaries.
double angular_from_hz(double f_hz);
double hz_from_angular(double omega);

/// Charging energy E_C/h in Hz for a shunt capacitance C (farad).
double charging_energy_hz(double c_farad);

/// Charging energy E_C/hbar in rad/s.
double charging_energy_rad(double c_farad);

/// Parse a physical value that is either a bare number (SI base units) or a
/// "number unit" string, e.g. "65 fF", "10nH", "7 GHz", "50 Ohm".
/// Accepted suffixes: F, fF, pF, H, nH, pH, Hz, GHz, Ohm.
double parse_quantity(const std::string& text);

}  // namespace dispz
