#include "dispz/dispersive.hpp"

#include <cmath>

#include "dispz/errors.hpp"

namespace dispz {

double exchange_coupling_J(const ImZEvaluator& z, const QubitMode& qi,
                           const QubitMode& qj) {
    if (qi.index == qj.index)
        throw InvalidInputError("exchange coupling requires two distinct qubits");
    const double zi = z.im_z(qi.index, qj.index, qi.omega);
    const double zj = z.im_z(qi.index, qj.index, qj.omega);
    return -0.25 * std::sqrt(qi.omega * qj.omega / (qi.l * qj.l)) *
           (zi / qi.omega + zj / qj.omega);
}

double direct_capacitive_J0(double g_i, double g_j, double omega_r) {
    if (!(omega_r > 0.0)) throw InvalidInputError("J0 requires omega_r > 0");
    return 2.0 * g_i * g_j / omega_r;
}

double dispersive_shift_chi(const QubitMode& q, double g_ik, double omega_rk) {
    const double denom = omega_rk * omega_rk - q.omega * q.omega;
    if (std::abs(denom) < 1e-6 * q.omega * q.omega)
        throw DispersiveViolationError(
            "qubit " + std::to_string(q.index) +
            " degenerate with internal mode; chi undefined");
    const double x = g_ik * omega_rk / denom;
    return 8.0 * q.delta * x * x;
}

AlphaMatrix AlphaMatrix::leading_order() const {
    AlphaMatrix lo = *this;
    for (int i = 0; i < n_qubits; ++i) {
        for (int j = 0; j < n_qubits; ++j) lo.a(i, j) = (i == j) ? 1.0 : 0.0;
    }
    lo.warnings.clear();
    return lo;
}

AlphaMatrix build_alpha(const CauerRealization& c,
                        const std::vector<QubitMode>& qubits,
                        const ImZEvaluator& z, const Tolerances& tol) {
    const int n = c.n_qubits;
    const int m = c.n_modes();
    if (static_cast<int>(qubits.size()) != n)
        throw InvalidInputError("qubit count does not match realization");

    AlphaMatrix out;
    out.n_qubits = n;
    out.n_modes = m;
    out.a = Eigen::MatrixXd::Zero(n + m, n + m);

    for (int i = 0; i < n; ++i) {
        const QubitMode& q = qubits[i];
        const double zi = 1.0 / q.omega;  // characteristic impedance in the final frame
        // AC part of Im[Z_ii(w_i)]: pole sum without the -A0/w term
        double im_ac = 0.0;
        for (int k = 0; k < m; ++k) {
            const auto& mode = c.modes[k];
            double rki = mode.r_normalized()(i);
            im_ac += rki * rki * q.omega /
                     (mode.omega * mode.omega - q.omega * q.omega);
        }
        out.a(i, i) = 1.0 - im_ac / zi;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            out.a(i, j) = -z.im_z(i, j, q.omega) / zi;
        }
        for (int k = 0; k < m; ++k) {
            const auto& mode = c.modes[k];
            const double rki = mode.r_normalized()(i);
            const double wr2 = mode.omega * mode.omega;
            const double wi2 = q.omega * q.omega;
            if (std::abs(wr2 - wi2) < 1e-6 * wi2)
                throw DispersiveViolationError(
                    "qubit " + std::to_string(i) + " degenerate with mode " +
                    std::to_string(k));
            out.a(i, n + k) = rki * std::sqrt(q.c) * wr2 / (wr2 - wi2);
            out.a(n + k, i) = rki * std::sqrt(q.c) * wi2 / (wi2 - wr2);
        }
    }
    for (int k = 0; k < m; ++k) out.a(n + k, n + k) = 1.0;

    for (int i = 0; i < n; ++i) {
        for (int p = 0; p < n + m; ++p) {
            if (p == i) continue;
            if (std::abs(out.a(i, p)) > tol.coupling_warn)
                out.warnings.push_back("alpha(" + std::to_string(i) + "," +
                                       std::to_string(p) +
                                       ") exceeds dispersive smallness: " +
                                       std::to_string(out.a(i, p)));
        }
    }
    return out;
}

BetaTensor::BetaTensor(const AlphaMatrix& alpha, const std::vector<QubitMode>& qubits,
                       const CauerRealization& c)
    : alpha_(alpha.a), n_qubits_(alpha.n_qubits) {
    const int n = alpha.n_qubits;
    const int m = alpha.n_modes;
    if (static_cast<int>(qubits.size()) != n)
        throw InvalidInputError("qubit count does not match alpha matrix");
    mode_freqs_.resize(n + m);
    for (int i = 0; i < n; ++i) mode_freqs_(i) = qubits[i].omega;
    for (int k = 0; k < m; ++k) mode_freqs_(n + k) = c.modes[k].omega;
    junction_scale_.resize(n);
    for (int i = 0; i < n; ++i)
        junction_scale_(i) = qubits[i].ec_rad / 12.0 * qubits[i].omega_j * qubits[i].omega_j;
}

double BetaTensor::beta(int p, int p2, int q, int q2) const {
    const int dim = static_cast<int>(mode_freqs_.size());
    for (int idx : {p, p2, q, q2})
        if (idx < 0 || idx >= dim) throw InvalidInputError("beta index out of range");
    const double freq_factor =
        1.0 / std::sqrt(mode_freqs_(p) * mode_freqs_(p2) * mode_freqs_(q) *
                        mode_freqs_(q2));
    double sum = 0.0;
    for (int s = 0; s < n_qubits_; ++s)
        sum += junction_scale_(s) * alpha_(s, p) * alpha_(s, p2) * alpha_(s, q) *
               alpha_(s, q2);
    return sum * freq_factor;
}

namespace {
SingleBusClosedForms single_bus_common(double g1, double g2, double w1, double w2,
                               double wr, double l1, double l2) {
    if (std::abs(w1 - wr) < 1e-9 * wr || std::abs(w2 - wr) < 1e-9 * wr)
        throw DispersiveViolationError(
            "single-bus closed forms undefined at qubit-bus degeneracy");
    SingleBusClosedForms r;
    r.omega1 = w1;
    r.omega2 = w2;
    r.omega_r = wr;
    r.g1 = g1;
    r.g2 = g2;
    r.l1 = l1;
    r.l2 = l2;
    r.j_pert = g1 * g2 * (w1 + w2 - 2.0 * wr) / (2.0 * (w1 - wr) * (w2 - wr));
    r.j0 = 2.0 * g1 * g2 / wr;
    const double pref = -0.5 * g1 * g2 * w1 * w2 / (wr * wr);
    r.j_z = pref * (1.0 / (wr - w1) + 1.0 / (wr - w2) + 1.0 / (wr + w1) +
                    1.0 / (wr + w2));
    r.j_rwa_z = pref * (1.0 / (wr - w1) + 1.0 / (wr - w2));
    return r;
}
}  // namespace

SingleBusClosedForms single_bus_closed_forms(double cq, double cc, double cr, double lr,
                                    double lj1, double lj2) {
    for (double v : {cq, cc, cr, lr, lj1, lj2})
        if (!(v > 0.0)) throw InvalidInputError("circuit parameters must be positive");
    const double wr = 1.0 / std::sqrt(lr * cr);
    // the closed forms take C_i = Cq (coupling capacitance neglected)
    QubitMode q1 = solve_qubit_mode(lj1, cq);
    QubitMode q2 = solve_qubit_mode(lj2, cq);
    const double z1 = std::sqrt(q1.l / cq), z2 = std::sqrt(q2.l / cq);
    const double zr = std::sqrt(lr / cr);
    const double g1 = cc / (2.0 * std::sqrt(z1 * zr) * cq * cr);
    const double g2 = cc / (2.0 * std::sqrt(z2 * zr) * cq * cr);

    SingleBusClosedForms r = single_bus_common(g1, g2, q1.omega, q2.omega, wr, q1.l, q2.l);
    const double wqr = 1.0 / std::sqrt(lr * cq);
    r.im_z12_exact = [=](double w) {
        return (cc * cc * lr * w / (cq + cc)) /
               (cq * (1.0 - w * w / (wr * wr)) +
                cc * (1.0 - 2.0 * w * w / (wqr * wqr) - w * w / (wr * wr)));
    };
    r.im_z12_approx = [=](double w) {
        return cc * cc * lr * w / (cq * cq * (1.0 - w * w / (wr * wr)));
    };
    return r;
}

SingleBusClosedForms single_bus_closed_forms_from_targets(double g1, double g2, double omega1,
                                            double omega2, double omega_r) {
    if (!(omega1 > 0.0) || !(omega2 > 0.0) || !(omega_r > 0.0))
        throw InvalidInputError("frequencies must be positive");
    // Im Z12 itself is not fixed by (g, w) targets alone (it carries the
    // impedance scale of the circuit); only the J curves are returned here.
    return single_bus_common(g1, g2, omega1, omega2, omega_r, 0.0, 0.0);
}

}  // namespace dispz
