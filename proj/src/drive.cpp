#include "dispz/drive.hpp"

#include <cmath>
#include <limits>

#include "dispz/constants.hpp"
#include "dispz/errors.hpp"

namespace dispz {

double DriveChannel::theta() const {
    return 0.5 * std::numbers::pi - std::atan(omega_d * z0 * c_pd);
}

std::complex<double> drive_coupling_epsilon(const ImZEvaluator& z,
                                            const QubitMode& q,
                                            const DriveChannel& ch) {
    if (!(ch.c_pd > 0.0))
        throw InvalidInputError("drive-port shunt capacitance must be positive");
    if (ch.port_index < 0 || ch.port_index >= z.n_ports())
        throw InvalidInputError("drive port index out of range");
    const double im = z.im_z(q.index, ch.port_index, q.omega);
    const double mag = std::sqrt(q.omega / (2.0 * constants::reduced_planck * q.l));
    const double division =
        ch.c_pd / std::sqrt(1.0 + ch.omega_d * ch.omega_d * ch.z0 * ch.z0 *
                                      ch.c_pd * ch.c_pd);
    return mag * im * division * std::polar(1.0, ch.theta());
}

CrosstalkResult crosstalk_matrix(const ImZEvaluator& z,
                                 const std::vector<QubitMode>& qubits,
                                 const std::vector<DriveChannel>& channels,
                                 const std::vector<int>& drive_assignment,
                                 const Tolerances& tol) {
    const int n = static_cast<int>(qubits.size());
    if (static_cast<int>(drive_assignment.size()) != n)
        throw InvalidInputError("drive assignment must cover every qubit");
    CrosstalkResult out;
    out.x_db = Eigen::MatrixXd::Zero(n, n);
    out.prefactor_db = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        const auto& ch = channels.at(drive_assignment[j]);
        const double den = std::abs(z.im_z(j, ch.port_index, qubits[j].omega));
        for (int i = 0; i < n; ++i) {
            out.prefactor_db(i, j) =
                20.0 * std::log10(std::sqrt(qubits[i].omega * qubits[j].l_j /
                                            (qubits[j].omega * qubits[i].l_j)));
            const double num = std::abs(z.im_z(i, ch.port_index, qubits[i].omega));
            if (den == 0.0) {
                out.x_db(i, j) = std::numeric_limits<double>::quiet_NaN();
                out.warnings.push_back("crosstalk X(" + std::to_string(i) + "," +
                                       std::to_string(j) +
                                       ") undefined: qubit " + std::to_string(j) +
                                       " is decoupled from its own drive");
                continue;
            }
            // the floor stands in for -inf on truly disconnected paths only
            if (num == 0.0) {
                out.x_db(i, j) = tol.crosstalk_floor_db;
                continue;
            }
            out.x_db(i, j) = 20.0 * std::log10(num / den);
        }
    }
    return out;
}

CrosstalkResult crosstalk_by_channel(const ImZEvaluator& z,
                                     const std::vector<QubitMode>& qubits,
                                     const std::vector<DriveChannel>& channels,
                                     const std::vector<int>& channel_owner,
                                     const Tolerances& tol) {
    const int n = static_cast<int>(qubits.size());
    const int nd = static_cast<int>(channels.size());
    if (static_cast<int>(channel_owner.size()) != nd)
        throw InvalidInputError("need one owner qubit per drive channel");
    CrosstalkResult out;
    out.x_db = Eigen::MatrixXd::Zero(n, nd);
    out.prefactor_db = Eigen::MatrixXd::Zero(n, nd);
    for (int d = 0; d < nd; ++d) {
        const auto& ch = channels[d];
        const QubitMode& owner = qubits.at(channel_owner[d]);
        const double den = std::abs(z.im_z(owner.index, ch.port_index, owner.omega));
        for (int i = 0; i < n; ++i) {
            out.prefactor_db(i, d) =
                20.0 * std::log10(std::sqrt(qubits[i].omega * owner.l_j /
                                            (owner.omega * qubits[i].l_j)));
            const double num = std::abs(z.im_z(i, ch.port_index, qubits[i].omega));
            if (den == 0.0) {
                out.x_db(i, d) = std::numeric_limits<double>::quiet_NaN();
                out.warnings.push_back("crosstalk X(" + std::to_string(i) + ",d" +
                                       std::to_string(d) +
                                       ") undefined: owner qubit is decoupled "
                                       "from the channel");
                continue;
            }
            if (num == 0.0) {
                out.x_db(i, d) = tol.crosstalk_floor_db;
                continue;
            }
            out.x_db(i, d) = 20.0 * std::log10(num / den);
        }
    }
    return out;
}

double purcell_rate(const ImZEvaluator& z, const QubitMode& q,
                    const DriveChannel& ch, double temperature_kelvin) {
    if (!(ch.c_pd > 0.0))
        throw InvalidInputError("drive-port shunt capacitance must be positive");
    const double im = z.im_z(q.index, ch.port_index, q.omega);
    const double x = q.omega * ch.z0 * ch.c_pd;
    double rate = (2.0 / q.l) * im * im * q.omega * q.omega * ch.z0 * ch.c_pd *
                  ch.c_pd / (1.0 + x * x);
    if (temperature_kelvin > 0.0)
        rate *= thermal_factor(q.omega, temperature_kelvin);
    return rate;
}

double BathSpectrum::value(double omega) const {
    return omega * z0 / (1.0 + omega * omega * z0 * z0 * c_pd * c_pd);
}

double BathSpectrum::value_corrected(double omega) const {
    const double c_eff = c_pd + correction;
    return omega * z0 / (1.0 + omega * omega * z0 * z0 * c_eff * c_eff);
}

BathSpectrum bath_spectrum(const DriveChannel& ch, double coupling_norm,
                           const Tolerances& tol) {
    BathSpectrum b;
    b.channel = ch.index;
    b.z0 = ch.z0;
    b.c_pd = ch.c_pd;
    b.correction = coupling_norm;
    b.simplified_valid = (coupling_norm / ch.c_pd) <= tol.bath_correction_limit;
    return b;
}

double bath_coupling_norm(const ImZEvaluator& z, const std::vector<QubitMode>& qubits,
                          const DriveChannel& ch) {
    double sum = 0.0;
    for (const auto& q : qubits) {
        const double im = z.im_z(q.index, ch.port_index, q.omega);
        sum += im * im / q.l;
    }
    return ch.c_pd * ch.c_pd * sum;
}

double thermal_factor(double omega, double temperature_kelvin) {
    if (temperature_kelvin < 0.0)
        throw InvalidInputError("temperature must be non-negative");
    if (temperature_kelvin == 0.0) return 1.0;
    if (omega == 0.0)
        throw InvalidInputError("thermal factor diverges at omega = 0 with T > 0");
    const double x = constants::reduced_planck * omega /
                     (2.0 * constants::boltzmann * temperature_kelvin);
    return 1.0 / std::tanh(x);
}

}  // namespace dispz
