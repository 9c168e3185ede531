#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "dispz/pole_residue.hpp"
#include "dispz/qubit.hpp"
#include "dispz/tolerances.hpp"

namespace dispz {

/// Canonical multiport Cauer realization of a lossless pole-residue
/// impedance: diagonal shunt capacitances at the qubit and drive ports,
/// one internal LC mode per transformer row, and Belevitch turns-ratio
/// rows coupling ports to modes.
///
/// Each mode stores its physical turns-ratio row together with the
/// resonator capacitance choice c_r (canonically c_r = 1, i.e.
/// characteristic impedance 1/w_Rk). The residue contribution is
/// A_k = t_k^T t_k / c_r, so the normalized rows r~ = t/sqrt(c_r) are the
/// gauge-independent quantities every formula consumes; physical couplings
/// must not depend on c_r.
struct CauerRealization {
    struct ModeRow {
        double omega = 0.0;       // rad/s
        Eigen::VectorXd r;        // qubit-port turns (physical), size N
        Eigen::VectorXd v;        // drive-port turns (physical), size N_D
        double c_r = 1.0;         // resonator capacitance choice
        double l_r() const { return 1.0 / (c_r * omega * omega); }
        Eigen::VectorXd r_normalized() const { return r / std::sqrt(c_r); }
        Eigen::VectorXd v_normalized() const { return v / std::sqrt(c_r); }
    };

    int n_qubits = 0;
    int n_drives = 0;
    Eigen::VectorXd c0;       // qubit shunt capacitances (farad)
    Eigen::VectorXd c_drive;  // drive-port shunt capacitances (farad)
    std::vector<ModeRow> modes;
    std::vector<std::string> warnings;

    int n_modes() const { return static_cast<int>(modes.size()); }

    /// M x N matrix of normalized qubit turns ratios.
    Eigen::MatrixXd r_matrix() const;
    /// M x N_D matrix of normalized drive turns ratios.
    Eigen::MatrixXd v_matrix() const;

    /// Im[Z] reassembled from the realization (same partial-fraction form).
    PoleResidueImpedance to_pole_residue() const;
};

/// Canonical synthesis from the partial-fraction form. Strict-diagonal mode
/// is the only supported mode: a non-diagonal A0 (direct electrostatic
/// coupling between port terminals) is rejected rather than approximated.
/// `c_r_scale` perturbs the per-mode resonator capacitance choice away from
/// 1 (used by the gauge-invariance tests).
CauerRealization synthesize(const PoleResidueImpedance& z, int n_qubit_ports,
                            int n_drive_ports, const Tolerances& tol = {},
                            double c_r_scale = 1.0);

/// Exactly specified frame chain: capacitance matrix (qubit+mode block),
/// rescaled stiffness, T transformation, and the post-transformation
/// stiffness M1 whose qubit diagonal is omega_i^2.
struct FrameMatrices {
    Eigen::MatrixXd c_full;   // (N+M) x (N+M)
    Eigen::MatrixXd c_rescaled;
    Eigen::MatrixXd m0;       // diagonal stiffness diag(1/L_i, 1/L_Rk)
    Eigen::MatrixXd t;        // transformation that makes the capacitance identity
    Eigen::MatrixXd m1;       // stiffness in the identity-capacitance frame
    Eigen::VectorXd omega_j;  // renormalized qubit frequencies
    Eigen::VectorXd omega_r;  // bare internal-mode frequencies
};

FrameMatrices build_frames(const CauerRealization& c,
                           const std::vector<QubitMode>& qubits);

/// Direct lumped re-evaluation of the synthesized circuit's port impedance:
/// assembles the full (ports + modes) capacitance/stiffness matrices with the
/// physical turns ratios and C_R choice, and solves (M - w^2 C) per
/// frequency. Independent of the partial-fraction form.
Eigen::MatrixXd cauer_im_z(const CauerRealization& c, double omega);

/// Bare qubit-mode coupling g_ik = sqrt(w_i w_Rk)/2 * r_ki * sqrt(C_i).
/// Appends a warning when r_ki sqrt(C_i) exceeds the dispersive smallness
/// threshold.
double bare_coupling_g(const CauerRealization& c, const QubitMode& q, int mode_k,
                       const Tolerances& tol = {},
                       std::vector<std::string>* warnings = nullptr);

}  // namespace dispz
