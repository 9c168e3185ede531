#include "dispz/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dispz/constants.hpp"
#include "dispz/dispersive.hpp"
#include "dispz/errors.hpp"
#include "dispz/sw.hpp"
#include "dispz/units.hpp"

namespace dispz {

RandomCircuit random_dispersive_circuit(Rng& rng, const RandomCircuitParams& p) {
    const int nq = rng.uniform_int(p.min_qubits, p.max_qubits);
    const int nm = rng.uniform_int(p.min_modes, p.max_modes);
    const int nd = p.n_drives;

    RandomCircuit rc;
    rc.realization.n_qubits = nq;
    rc.realization.n_drives = nd;
    rc.realization.c0.resize(nq);
    rc.realization.c_drive.resize(nd);
    for (int d = 0; d < nd; ++d)
        rc.realization.c_drive(d) = rng.uniform(60e-15, 150e-15);

    for (int i = 0; i < nq; ++i) {
        const double c = rng.uniform(50e-15, 90e-15);
        const double f_target = rng.uniform(4.2e9, 5.5e9);
        // invert the renormalization for the junction inductance
        const double w = constants::two_pi * f_target;
        const double ec = charging_energy_rad(c);
        const double lj = (1.0 - 2.0 * ec / w) / (w * w * c);
        rc.realization.c0(i) = c;
        rc.l_j.push_back(lj);
        QubitMode q = solve_qubit_mode(lj, c);
        q.index = i;
        q.name = "q" + std::to_string(i);
        rc.qubits.push_back(std::move(q));
    }

    std::vector<double> wr(nm);
    for (int k = 0; k < nm; ++k) wr[k] = constants::two_pi * rng.uniform(6.4e9, 9.5e9);
    std::sort(wr.begin(), wr.end());
    for (int k = 1; k < nm; ++k)
        if (wr[k] - wr[k - 1] < constants::two_pi * 50e6)
            wr[k] = wr[k - 1] + constants::two_pi * 50e6;

    // couplings: draw, then rescale to the aggregate dispersive bound
    std::vector<std::vector<double>> g(nq, std::vector<double>(nm));
    for (int i = 0; i < nq; ++i) {
        double agg = 0.0;
        for (int k = 0; k < nm; ++k) {
            const double detuning = std::abs(rc.qubits[i].omega - wr[k]);
            g[i][k] = p.gmax_ratio * detuning * rng.uniform(0.3, 1.0);
            agg += (g[i][k] / detuning) * (g[i][k] / detuning);
        }
        const double scale = p.gmax_ratio / std::sqrt(agg) * rng.uniform(0.5, 1.0);
        for (int k = 0; k < nm; ++k) g[i][k] *= scale;
    }

    for (int k = 0; k < nm; ++k) {
        CauerRealization::ModeRow row;
        row.omega = wr[k];
        row.c_r = 1.0;
        row.r.resize(nq);
        for (int i = 0; i < nq; ++i)
            row.r(i) = 2.0 * g[i][k] /
                       std::sqrt(rc.qubits[i].omega * wr[k] * rc.realization.c0(i));
        row.v.resize(nd);
        for (int d = 0; d < nd; ++d)
            row.v(d) = rng.uniform(-1.0, 1.0) * 0.02 /
                       std::sqrt(wr[k] * rc.realization.c_drive(d));
        rc.realization.modes.push_back(std::move(row));
    }
    return rc;
}

PoleResidueImpedance random_pole_residue(Rng& rng, int n_ports, int n_poles) {
    PoleResidueImpedance z;
    z.n_ports = n_ports;
    z.a0 = Eigen::MatrixXd::Zero(n_ports, n_ports);
    for (int i = 0; i < n_ports; ++i)
        z.a0(i, i) = 1.0 / rng.uniform(40e-15, 400e-15);
    z.a_inf = Eigen::MatrixXd::Zero(n_ports, n_ports);
    double f = rng.uniform(4e9, 6e9);
    for (int k = 0; k < n_poles; ++k) {
        PoleResidueImpedance::Pole p;
        p.omega = constants::two_pi * f;
        f += rng.uniform(0.3e9, 1.5e9);
        Eigen::VectorXd r(n_ports);
        for (int i = 0; i < n_ports; ++i)
            r(i) = rng.uniform(-1.0, 1.0) * 0.05 / std::sqrt(100e-15);
        p.residue = r * r.transpose();
        z.poles.push_back(std::move(p));
    }
    return z;
}

std::string ValidationSummary::to_text() const {
    char buf[700];
    std::snprintf(
        buf, sizeof(buf),
        "validation: %d circuits, seed %llu, gmax ratio %.12e\n"
        "  J formula vs order-2 SW    : max rel err %.12e (threshold %.1e) %s\n"
        "  J formula vs exact SW      : max rel err %.12e (threshold %.1e) %s\n"
        "  D projection two routes    : max rel err %.12e (threshold %.1e) %s\n"
        "  delta beta vs closed form  : max rel err %.12e (threshold %.1e) %s\n"
        "  chi   beta vs closed form  : max rel err %.12e (threshold %.1e) %s\n"
        "overall: %s\n",
        n_circuits, static_cast<unsigned long long>(seed), gmax_ratio,
        max_j_err_order2, thr_order2, max_j_err_order2 <= thr_order2 ? "pass" : "FAIL",
        max_j_err_exact, thr_exact, max_j_err_exact <= thr_exact ? "pass" : "FAIL",
        max_d_err, thr_d, max_d_err <= thr_d ? "pass" : "FAIL",
        max_delta_err, thr_beta, max_delta_err <= thr_beta ? "pass" : "FAIL",
        max_chi_err, thr_beta, max_chi_err <= thr_beta ? "pass" : "FAIL",
        pass() ? "pass" : "FAIL");
    return buf;
}

ValidationSummary run_validation(int n_circuits, std::uint64_t seed,
                                 double gmax_ratio, const Tolerances& tol) {
    ValidationSummary s;
    s.n_circuits = n_circuits;
    s.seed = seed;
    s.gmax_ratio = gmax_ratio;
    if (n_circuits == 0) return s;

    Rng rng(seed);
    RandomCircuitParams params;
    params.gmax_ratio = gmax_ratio;

    for (int t = 0; t < n_circuits; ++t) {
        RandomCircuit rc = random_dispersive_circuit(rng, params);
        const int nq = rc.realization.n_qubits;
        const int nm = rc.realization.n_modes();

        PoleResidueEvaluator z(rc.realization.to_pole_residue(), tol.pole_guard);

        FrameMatrices f = build_frames(rc.realization, rc.qubits);
        auto order2 = schrieffer_wolff(f.m1, f.omega_j, f.omega_r, SwOrder::Order2, tol);
        auto exact =
            schrieffer_wolff(f.m1, f.omega_j, f.omega_r, SwOrder::NumericExact, tol);
        Eigen::MatrixXd j2 = j_from_blockdiag(order2, rc.qubits);
        Eigen::MatrixXd je = j_from_blockdiag(exact, rc.qubits);

        for (int i = 0; i < nq; ++i) {
            for (int jx = i + 1; jx < nq; ++jx) {
                const double jf = exchange_coupling_J(z, rc.qubits[i], rc.qubits[jx]);
                if (j2(i, jx) != 0.0)
                    s.max_j_err_order2 = std::max(
                        s.max_j_err_order2, std::abs(jf - j2(i, jx)) / std::abs(j2(i, jx)));
                if (je(i, jx) != 0.0)
                    s.max_j_err_exact = std::max(
                        s.max_j_err_exact, std::abs(jf - je(i, jx)) / std::abs(je(i, jx)));
            }
        }

        // drive projection: matrix route vs impedance route
        Eigen::MatrixXd v = rc.realization.v_matrix();
        Eigen::MatrixXd d = drive_projection_D(f.m1, v, f.omega_j, f.omega_r, tol);
        for (int i = 0; i < nq; ++i) {
            for (int dc = 0; dc < rc.realization.n_drives; ++dc) {
                const double via_z = z.im_z(i, nq + dc, rc.qubits[i].omega) /
                                     std::sqrt(rc.qubits[i].l);
                if (via_z != 0.0)
                    s.max_d_err = std::max(s.max_d_err,
                                           std::abs(d(i, dc) - via_z) / std::abs(via_z));
            }
        }

        // beta route vs closed forms, on the leading-order alpha
        AlphaMatrix alpha = build_alpha(rc.realization, rc.qubits, z, tol);
        BetaTensor beta(alpha.leading_order(), rc.qubits, rc.realization);
        for (int i = 0; i < nq; ++i) {
            const double d_closed = rc.qubits[i].delta;
            const double d_beta = beta.delta_from_beta(i);
            s.max_delta_err = std::max(s.max_delta_err,
                                       std::abs(d_beta - d_closed) / std::abs(d_closed));
            for (int k = 0; k < nm; ++k) {
                const double g_ik =
                    bare_coupling_g(rc.realization, rc.qubits[i], k, tol, nullptr);
                const double chi_closed =
                    dispersive_shift_chi(rc.qubits[i], g_ik, rc.realization.modes[k].omega);
                if (chi_closed == 0.0) continue;
                const double chi_beta = beta.chi_from_beta(i, k);
                s.max_chi_err = std::max(
                    s.max_chi_err, std::abs(chi_beta - chi_closed) / std::abs(chi_closed));
            }
        }
    }
    return s;
}

}  // namespace dispz
