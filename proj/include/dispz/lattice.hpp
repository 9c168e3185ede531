#pragma once

#include <string>
#include <vector>

#include "dispz/network.hpp"

namespace dispz {

enum class BusMode { TwoQubit, FourQubit };

/// Illustrative default parameters for the 2 x cols device generator. The
/// real device values are not public; these land J12 at a few MHz with a
/// clean exponential decay across the lattice.
struct LatticeParams {
    int rows = 2;
    int cols = 8;
    BusMode bus_mode = BusMode::TwoQubit;
    bool with_readout = false;

    double f_qubit_hz = 5.25e9;     // uniform qubit target frequency
    double c_qubit = 65e-15;        // qubit shunt capacitance
    double f_bus_hz = 6.30e9;       // bus LC frequency
    double c_bus = 400e-15;         // bus capacitance
    double c_coupling = 4.5e-15;    // qubit-bus coupling capacitance
    double f_readout_hz = 7.0e9;    // readout LC frequency
    double c_readout = 400e-15;
    double c_readout_coupling = 4e-15;  // qubit-readout coupling
    double c_kappa = 1.5e-15;       // readout-drive coupling
    double c_drive = 80e-15;        // drive-port shunt capacitance
    double z0 = 50.0;
};

LatticeParams lattice_params_from_json_file(const std::string& path);

struct LatticeBuild {
    LinearNetwork net;
    int n_qubits = 0;
    int n_buses = 0;
};

/// Builds the 2 x cols device: qubits on a grid, one LC bus per edge
/// (TwoQubit) or per plaquette (FourQubit), optional readout + drive chain
/// per qubit. Junction inductances are solved so every qubit lands at
/// f_qubit_hz given its synthesized shunt capacitance.
LatticeBuild build_lattice(const LatticeParams& p);

/// Least-squares fit of y against x with the coefficient of determination.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace dispz
