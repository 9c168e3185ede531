#pragma once

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "dispz/drive.hpp"
#include "dispz/qubit.hpp"

namespace dispz {

/// Complete effective-Hamiltonian parameter set for a device, plus the
/// drive-environment
/// quantities. Frequencies are kept in rad/s internally; serialization adds
/// GHz/MHz fields.
struct DispersiveReport {
    std::vector<QubitMode> qubits;
    std::vector<double> mode_omegas;      // rad/s
    std::vector<int> mode_multiplicity;   // transformer rows sharing the pole
    Eigen::MatrixXd g;                    // N x M, rad/s
    Eigen::MatrixXd j;                    // N x N, rad/s, zero diagonal
    Eigen::MatrixXd chi;                  // N x M, rad/s
    Eigen::MatrixXd j0_direct;            // N x N, rad/s; empty unless single-bus

    std::vector<DriveChannel> drives;
    std::vector<int> drive_assignment;    // channel index per qubit (or -1)
    Eigen::MatrixXd eps_abs;              // N x D, (rad/s)/V
    Eigen::MatrixXd eps_phase;            // N x D, rad
    Eigen::MatrixXd crosstalk_db;         // N x N
    Eigen::MatrixXd crosstalk_prefactor_db;
    Eigen::MatrixXd purcell;              // N x D, 1/s
    std::vector<double> purcell_total;    // N, 1/s

    std::vector<std::string> warnings;

    int n_qubits() const { return static_cast<int>(qubits.size()); }
    int n_modes() const { return static_cast<int>(mode_omegas.size()); }
    int n_drives() const { return static_cast<int>(drives.size()); }
};

nlohmann::ordered_json report_to_json(const DispersiveReport& r);

/// Deterministic JSON dump: insertion-ordered keys, 2-space indent, LF line
/// endings, every float printed as %.12e, NaN as null.
std::string dump_json_fixed(const nlohmann::ordered_json& doc);

/// Human-readable summary table.
std::string report_to_text(const DispersiveReport& r);

}  // namespace dispz
