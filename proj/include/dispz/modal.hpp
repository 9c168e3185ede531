#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dispz/network.hpp"
#include "dispz/pole_residue.hpp"
#include "dispz/tolerances.hpp"

namespace dispz {

/// Modal form of a lossless network's port impedance: finite modes with
/// per-port residue vectors plus the DC elastance. Raw modes keep one entry
/// per eigenmode; near-degenerate modes are merged only when converting to
/// the pole-residue form.
struct ModalDecomposition {
    struct Mode {
        double omega = 0.0;            // rad/s
        Eigen::VectorXd residue_vector;  // per-port projection b~_k
    };
    int n_ports = 0;
    std::vector<Mode> modes;           // ascending omega, port-coupled only
    Eigen::MatrixXd a0;                // DC elastance
    std::vector<std::string> warnings;

    /// Pole-residue form; modes closer than pole_merge_tol are merged into a
    /// single pole (residues summed, multiplicity recorded, warning kept).
    PoleResidueImpedance to_pole_residue(const Tolerances& tol = {}) const;
};

/// Generalized eigen-solve on the (inverse-inductance, capacitance) node
/// pencil; junctions removed. Flags a nonzero A_inf stage instead of
/// guessing a Born-Oppenheimer reduction.
ModalDecomposition extract_modes(const LinearNetwork& net, const Tolerances& tol = {});

}  // namespace dispz
