#pragma once

#include <Eigen/Dense>
#include <vector>

#include "dispz/network.hpp"
#include "dispz/pole_residue.hpp"
#include "dispz/tolerances.hpp"

namespace dispz {

/// Node-space matrices of a lossless network (ground eliminated):
/// Maxwell capacitance C, inverse-inductance Gamma, and the port incidence
/// matrix B (current in at the first node of the pair, out at the second).
struct NodeMatrices {
    Eigen::MatrixXd c;      // n x n
    Eigen::MatrixXd gamma;  // n x n
    Eigen::MatrixXd b;      // n x n_ports
};

/// Assembles node matrices with junctions removed (qubit ports open). When
/// `junction_inductances` is supplied, junction branches are stamped as
/// linear inductors with those values (one per junction, in order).
NodeMatrices assemble_node_matrices(
    const LinearNetwork& net,
    const std::vector<double>* junction_inductances = nullptr);

/// Direct frequency-domain impedance of the lossless network between its
/// ports (junctions removed). Z(w) = j w B^T (Gamma - w^2 C)^{-1} B, purely
/// imaginary for a lossless network; this class reports Im[Z].
class MnaEvaluator final : public ImZEvaluator {
public:
    using ImZEvaluator::im_z;
    explicit MnaEvaluator(const LinearNetwork& net, const Tolerances& tol = {});

    int n_ports() const override { return static_cast<int>(m_.b.cols()); }
    Eigen::MatrixXd im_z(double omega) const override;

    /// Resonance frequencies of the open-port network (rad/s), ascending.
    const std::vector<double>& resonances() const { return resonances_; }

    /// True when the node capacitance matrix is singular (a purely inductive
    /// stage exists at some node).
    bool capacitance_singular() const { return c_singular_; }

    /// True when a port incidence vector overlaps the null space of C, i.e.
    /// the impedance has a pole at infinity (A_inf != 0).
    bool has_inductive_port_stage() const { return inductive_port_stage_; }

    const NodeMatrices& matrices() const { return m_; }

private:
    NodeMatrices m_;
    std::vector<double> resonances_;
    bool c_singular_ = false;
    bool inductive_port_stage_ = false;
    double guard_;
};

/// Generalized eigen-solve of the (Gamma, C) pencil. Returns ascending mode
/// frequencies omega_k (zero modes omitted) and, via `port_projections`,
/// the vectors b~_k = B^T C^{-1/2} u_k whose outer products are the
/// partial-fraction residues.
struct NetworkModes {
    std::vector<double> omegas;              // rad/s, ascending, finite modes only
    std::vector<Eigen::VectorXd> port_projections;
};

NetworkModes solve_network_modes(const NodeMatrices& m, const Tolerances& tol = {});

/// DC port elastance computed by contracting inductor-connected node groups
/// (inductors are shorts at DC) and reducing the capacitance matrix.
Eigen::MatrixXd dc_port_elastance(const LinearNetwork& net,
                                  const std::vector<double>* junction_inductances = nullptr);

}  // namespace dispz
