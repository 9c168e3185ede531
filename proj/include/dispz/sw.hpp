#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dispz/network.hpp"
#include "dispz/qubit.hpp"
#include "dispz/tolerances.hpp"

namespace dispz {

enum class SwOrder { Order2, NumericExact };

/// Result of block-diagonalizing the stiffness matrix M1 over the
/// qubit/resonator split.
struct BlockDiagonalResult {
    Eigen::MatrixXd m1_tilde;  // block diagonal stiffness
    Eigen::MatrixXd s;         // skew-symmetric generator
    SwOrder order = SwOrder::Order2;
    double residual = 0.0;     // off-block norm of exp(-S) M1 exp(S)
    int n_qubits = 0;
};

/// Block diagonalization of M1. Order2 implements the literal second-order
/// sum with the bare mode frequencies in the denominators; NumericExact
/// computes the least-action (direct-rotation) block diagonalization, whose
/// generator has the smallest Frobenius norm among all block-diagonalizing
/// rotations.
BlockDiagonalResult schrieffer_wolff(const Eigen::MatrixXd& m1,
                                     const Eigen::VectorXd& omega_qubit,
                                     const Eigen::VectorXd& omega_mode_bare,
                                     SwOrder order, const Tolerances& tol = {});

/// J_ij = (1/2) sqrt(Z_i Z_j) (M~1)_ij with Z_i = 1/omega_i.
Eigen::MatrixXd j_from_blockdiag(const BlockDiagonalResult& r,
                                 const std::vector<QubitMode>& qubits);

/// Drive projection D_id = -sum_k (M1)_ik v_kd / (w_i^2 - w_Rk^2); equals
/// Im[Z_{i,p(d)}(w_i)] / sqrt(L_i).
Eigen::MatrixXd drive_projection_D(const Eigen::MatrixXd& m1,
                                   const Eigen::MatrixXd& v,
                                   const Eigen::VectorXd& omega_qubit,
                                   const Eigen::VectorXd& omega_mode_bare,
                                   const Tolerances& tol = {});

/// Exact normal modes of the full linear circuit with every junction
/// linearized at the supplied inductance (renormalized L_i). Frequencies
/// ascend; port_projections give each mode's weight on the port incidence
/// vectors.
struct ExactModes {
    std::vector<double> omegas;
    std::vector<Eigen::VectorXd> port_projections;
};

ExactModes exact_normal_modes(const LinearNetwork& net,
                              const std::vector<double>& junction_inductances,
                              const Tolerances& tol = {});

}  // namespace dispz
