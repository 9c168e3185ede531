#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "dispz/pole_residue.hpp"
#include "dispz/qubit.hpp"
#include "dispz/tolerances.hpp"

namespace dispz {

/// One drive line: port index into the full port set, line impedance Z0,
/// total drive-port shunt capacitance C_pd, and the single-tone drive
/// frequency omega_d.
struct DriveChannel {
    int index = 0;
    std::string name;
    int port_index = 0;   // global port index (qubit ports first)
    double z0 = 50.0;     // ohm
    double c_pd = 0.0;    // farad
    double omega_d = 0.0; // rad/s

    /// theta_d = pi/2 - arctan(w_d Z0 C_pd)
    double theta() const;
};

/// Qubit-drive coupling, complex, (rad/s)/volt:
///   eps = sqrt(w_i/(2 hbar L_i)) Im[Z_{i,p(d)}(w_i)] e^{i theta_d} C_pd
///         / sqrt(1 + w_d^2 Z0^2 C_pd^2)
std::complex<double> drive_coupling_epsilon(const ImZEvaluator& z,
                                            const QubitMode& q,
                                            const DriveChannel& ch);

/// Classical crosstalk in dB between qubit i and the drive assigned to
/// qubit j: X_ij = 20 log10(|Im Z_{i,d(j)}(w_i)| / |Im Z_{j,d(j)}(w_j)|).
/// Disconnected paths floor at tol.crosstalk_floor_db; a vanishing
/// denominator produces NaN and a warning. The neglected
/// sqrt(w_i L_Jj / (w_j L_Ji)) prefactor is returned separately in dB.
struct CrosstalkResult {
    Eigen::MatrixXd x_db;             // N x N
    Eigen::MatrixXd prefactor_db;     // N x N diagnostic
    std::vector<std::string> warnings;
};

CrosstalkResult crosstalk_matrix(const ImZEvaluator& z,
                                 const std::vector<QubitMode>& qubits,
                                 const std::vector<DriveChannel>& channels,
                                 const std::vector<int>& drive_assignment,
                                 const Tolerances& tol = {});

/// Channel-referenced form (N x N_D): column d is referenced to the qubit
/// that channel d drives best (its "owner"), X_{id} =
/// 20 log10(|Im Z_{i,p(d)}(w_i)| / |Im Z_{owner,p(d)}(w_owner)|).
CrosstalkResult crosstalk_by_channel(const ImZEvaluator& z,
                                     const std::vector<QubitMode>& qubits,
                                     const std::vector<DriveChannel>& channels,
                                     const std::vector<int>& channel_owner,
                                     const Tolerances& tol = {});

/// Purcell rate 1/T1 through one drive line, 1/second:
///   (2/L_i) Im[Z_{i,p(d)}(w_i)]^2 w_i^2 Z0 C_pd^2 / (1 + w_i^2 Z0^2 C_pd^2).
/// The
/// optional thermal factor multiplies by coth(hbar w_i / 2 k_B T).
double purcell_rate(const ImZEvaluator& z, const QubitMode& q,
                    const DriveChannel& ch, double temperature_kelvin = 0.0);

/// Ohmic bath spectrum of a drive line, J_d(w) = w Z0 / (1 + w^2 Z0^2 C^2),
/// with and without the m^T C^{-1} m correction to the effective shunt.
struct BathSpectrum {
    int channel = 0;
    double z0 = 0.0;
    double c_pd = 0.0;
    double correction = 0.0;  // m^T C^{-1} m, farad
    bool simplified_valid = true;

    double value(double omega) const;            // simplified form
    double value_corrected(double omega) const;  // with the correction term
};

BathSpectrum bath_spectrum(const DriveChannel& ch, double coupling_norm,
                           const Tolerances& tol = {});

/// m^T C^{-1} m = C_pd^2 sum_i Im[Z_{i,p(d)}(w_i)]^2 / L_i in the final frame.
double bath_coupling_norm(const ImZEvaluator& z, const std::vector<QubitMode>& qubits,
                          const DriveChannel& ch);

/// coth(hbar w / 2 k_B T); 1 at T = 0 by limit. Diverges at w = 0 with T > 0.
double thermal_factor(double omega, double temperature_kelvin);

}  // namespace dispz
