#pragma once

#include <string>
#include <vector>

#include "dispz/tolerances.hpp"

namespace dispz {

/// Per-qubit derived quantities. `omega` is the renormalized qubit frequency
/// solving omega^2 = omega_J^2 (1 - 2 (E_C/hbar)/omega), so that the qubit
/// inductance L = L_J / (1 - 2(E_C/hbar)/omega) satisfies omega = 1/sqrt(L C)
/// to machine precision.
struct QubitMode {
    int index = 0;
    std::string name;
    double l_j = 0.0;        // bare junction inductance, henry
    double c = 0.0;          // total shunt capacitance, farad
    double ec_over_h = 0.0;  // charging energy E_C/h, Hz
    double ec_rad = 0.0;     // E_C/hbar, rad/s
    double omega_j = 0.0;    // bare frequency 1/sqrt(L_J C), rad/s
    double omega = 0.0;      // renormalized qubit frequency, rad/s
    double l = 0.0;          // renormalized qubit inductance, henry
    double delta = 0.0;      // anharmonicity, rad/s (negative for transmons)
    std::vector<std::string> warnings;
};

/// Closed-form small-anharmonicity approximation
/// omega = omega_J - (E_C/hbar)/(1 - (E_C/hbar)/omega_J).
double qubit_frequency_eq61(double omega_j, double ec_rad);

/// Solves the renormalization equation exactly (Newton from the closed-form
/// guess) and fills all derived quantities. Warns when (E_C/hbar)/omega_J
/// exceeds the transmon-limit threshold.
QubitMode solve_qubit_mode(double l_j, double c, const Tolerances& tol = {});

}  // namespace dispz
