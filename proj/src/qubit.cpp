#include "dispz/qubit.hpp"

#include <cmath>

#include "dispz/constants.hpp"
#include "dispz/errors.hpp"
#include "dispz/units.hpp"

namespace dispz {

double qubit_frequency_eq61(double omega_j, double ec_rad) {
    return omega_j - ec_rad / (1.0 - ec_rad / omega_j);
}

QubitMode solve_qubit_mode(double l_j, double c, const Tolerances& tol) {
    if (!(l_j > 0.0) || !std::isfinite(l_j))
        throw InvalidInputError("junction inductance must be positive");
    if (!(c > 0.0) || !std::isfinite(c))
        throw InvalidInputError("qubit shunt capacitance must be positive");

    QubitMode q;
    q.l_j = l_j;
    q.c = c;
    q.ec_over_h = charging_energy_hz(c);
    q.ec_rad = charging_energy_rad(c);
    q.omega_j = 1.0 / std::sqrt(l_j * c);

    const double r = q.ec_rad / q.omega_j;
    if (r >= tol.transmon_r_warn)
        q.warnings.push_back("transmon limit violated: (E_C/hbar)/omega_J = " +
                             std::to_string(r));

    // Newton on f(w) = w^2 - omega_J^2 (1 - 2 ec/w), seeded by the closed form.
    double w = qubit_frequency_eq61(q.omega_j, q.ec_rad);
    if (!(w > 0.0))
        throw UnphysicalRenormalizationError("closed-form qubit frequency non-positive");
    const double wj2 = q.omega_j * q.omega_j;
    for (int it = 0; it < 64; ++it) {
        double f = w * w - wj2 * (1.0 - 2.0 * q.ec_rad / w);
        double df = 2.0 * w - 2.0 * wj2 * q.ec_rad / (w * w);
        double step = f / df;
        w -= step;
        if (!(w > 0.0))
            throw UnphysicalRenormalizationError(
                "no physical renormalized frequency (transmon limit violated, "
                "r = " + std::to_string(r) + ")");
        if (std::abs(step) <= 1e-15 * w) break;
    }
    // the cubic x^3 - x + 2r has no root in (0,1) beyond r ~ 0.1925
    if (std::abs(w * w - wj2 * (1.0 - 2.0 * q.ec_rad / w)) > 1e-9 * wj2)
        throw UnphysicalRenormalizationError(
            "renormalization equation has no real solution (transmon limit "
            "violated, r = " + std::to_string(r) + ")");
    q.omega = w;

    const double denom = 1.0 - 2.0 * q.ec_rad / q.omega;
    if (!(denom > 0.0))
        throw UnphysicalRenormalizationError(
            "2(E_C/hbar)/omega >= 1: junction inductance renormalization unphysical");
    q.l = l_j / denom;
    q.delta = -q.ec_rad * (q.omega_j / q.omega) * (q.omega_j / q.omega);

    // internal self-consistency: omega == 1/sqrt(L C)
    double w_check = 1.0 / std::sqrt(q.l * q.c);
    if (std::abs(w_check - q.omega) > 1e-9 * q.omega)
        throw UnphysicalRenormalizationError("qubit mode self-consistency failed");
    return q;
}

}  // namespace dispz
