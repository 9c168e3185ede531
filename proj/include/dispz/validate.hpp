#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dispz/cauer.hpp"
#include "dispz/pole_residue.hpp"
#include "dispz/qubit.hpp"

namespace dispz {

/// Deterministic uniform double in [lo, hi) from a mt19937_64 stream
/// (independent of the standard library's distribution implementation).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double lo, double hi) {
        const double u = (eng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

/// Random dispersive circuit at the Cauer level: transmons below the mode
/// band, couplings bounded by the aggregate per-qubit dispersive ratio
/// sqrt(sum_k (g_ik/Delta_ik)^2) <= gmax_ratio.
struct RandomCircuit {
    CauerRealization realization;
    std::vector<QubitMode> qubits;
    std::vector<double> l_j;
};

struct RandomCircuitParams {
    int min_qubits = 2, max_qubits = 4;
    int min_modes = 1, max_modes = 5;
    int n_drives = 1;
    double gmax_ratio = 0.05;
};

RandomCircuit random_dispersive_circuit(Rng& rng, const RandomCircuitParams& p = {});

/// Random lossless pole-residue decomposition (diagonal A0, rank-1 PSD
/// residues, well-separated poles) for synthesis round-trip checks.
PoleResidueImpedance random_pole_residue(Rng& rng, int n_ports, int n_poles);

/// Cross-validation of the closed-form J/D/beta machinery against the
/// Schrieffer-Wolff oracle over seeded random circuits.
struct ValidationSummary {
    int n_circuits = 0;
    std::uint64_t seed = 0;
    double gmax_ratio = 0.05;
    double max_j_err_order2 = 0.0;   // formula vs literal second-order SW
    double max_j_err_exact = 0.0;    // formula vs numeric-exact SW
    double max_d_err = 0.0;          // drive projection: sum vs impedance route
    double max_delta_err = 0.0;      // -12 beta_iiii vs closed form
    double max_chi_err = 0.0;        // -24 beta_iikk vs closed form
    double thr_order2 = 1e-10;
    double thr_exact = 1e-2;
    double thr_d = 1e-10;
    double thr_beta = 1e-6;

    bool pass() const {
        return max_j_err_order2 <= thr_order2 && max_j_err_exact <= thr_exact &&
               max_d_err <= thr_d && max_delta_err <= thr_beta &&
               max_chi_err <= thr_beta;
    }
    std::string to_text() const;
};

ValidationSummary run_validation(int n_circuits, std::uint64_t seed,
                                 double gmax_ratio = 0.05,
                                 const Tolerances& tol = {});

}  // namespace dispz
