#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "dispz/cauer.hpp"
#include "dispz/pole_residue.hpp"
#include "dispz/qubit.hpp"

namespace dispz {

/// Exchange coupling between two qubits from the impedance response:
///   J_ij = -(1/4) sqrt(w_i w_j / (L_i L_j)) Im[Z_ij(w_i)/w_i + Z_ij(w_j)/w_j]
/// Symmetric in i <-> j by construction. rad/s.
double exchange_coupling_J(const ImZEvaluator& z, const QubitMode& qi,
                           const QubitMode& qj);

/// Bus-mediated direct capacitive coupling J0 = 2 g_i g_j / w_r (single-bus
/// context).
double direct_capacitive_J0(double g_i, double g_j, double omega_r);

/// Dispersive shift chi_ik = 8 delta_i (g_ik w_Rk / (w_Rk^2 - w_i^2))^2.
double dispersive_shift_chi(const QubitMode& q, double g_ik, double omega_rk);

/// Mode-mixing matrix alpha of the junction-potential expansion, indexed
/// (qubit 0..N-1, mode N..N+M-1).
struct AlphaMatrix {
    Eigen::MatrixXd a;  // (N+M) x (N+M)
    int n_qubits = 0;
    int n_modes = 0;
    std::vector<std::string> warnings;

    /// The limit in which the closed forms for delta and chi are derived:
    /// qubit diagonal set to 1, qubit-qubit off-diagonal dropped.
    AlphaMatrix leading_order() const;
};

AlphaMatrix build_alpha(const CauerRealization& c,
                        const std::vector<QubitMode>& qubits,
                        const ImZEvaluator& z, const Tolerances& tol = {});

/// Fourth-order expansion coefficients
///   beta_{pp'qq'} = sum_s (E_C^s/hbar/12) w_Js^2 (w_p w_p' w_q w_q')^{-1/2}
///                   alpha_sp alpha_sp' alpha_sq alpha_sq'
/// evaluated on demand; fully symmetric under index permutations.
class BetaTensor {
public:
    BetaTensor(const AlphaMatrix& alpha, const std::vector<QubitMode>& qubits,
               const CauerRealization& c);

    double beta(int p, int p2, int q, int q2) const;

    /// delta_i = -12 beta_iiii
    double delta_from_beta(int i) const { return -12.0 * beta(i, i, i, i); }
    /// chi_ik = -24 beta_iikk (k is a mode index, 0-based)
    double chi_from_beta(int i, int k) const {
        int km = n_qubits_ + k;
        return -24.0 * beta(i, i, km, km);
    }
    /// Resonator self-Kerr -12 beta_kkkk. Exposed through the full tensor
    /// only; not certified against any closed form.
    double resonator_self_kerr(int k) const {
        int km = n_qubits_ + k;
        return -12.0 * beta(km, km, km, km);
    }

private:
    Eigen::MatrixXd alpha_;
    Eigen::VectorXd mode_freqs_;   // (N+M) final-frame frequencies
    Eigen::VectorXd junction_scale_;  // (E_C^s/hbar/12) w_Js^2 per junction
    int n_qubits_ = 0;
};

/// Closed forms for two transmons coupled through a single LC bus.
struct SingleBusClosedForms {
    double omega1 = 0.0, omega2 = 0.0, omega_r = 0.0;  // rad/s
    double g1 = 0.0, g2 = 0.0;                         // rad/s
    double l1 = 0.0, l2 = 0.0;                         // henry
    double j_pert = 0.0;     // perturbation-theory J
    double j0 = 0.0;         // capacitively mediated J0 = 2 g1 g2 / w_r
    double j_z = 0.0;        // impedance-formula J on the approximate Im Z
    double j_rwa_z = 0.0;    // RWA part; equals (w1 w2 / w_r^2) j_pert
    std::function<double(double)> im_z12_exact;   // unapproximated ladder form
    std::function<double(double)> im_z12_approx;  // single-pole approximation
};

/// Circuit-parameter form: qubit modes evaluated with C_i = Cq, matching the
/// Cc << Cq << Cr approximations under which the closed forms are derived.
SingleBusClosedForms single_bus_closed_forms(double cq, double cc, double cr, double lr,
                                    double lj1, double lj2);

/// Target form used by the bus-frequency sweep: couplings and qubit
/// frequencies given directly (the g-substituted closed forms).
SingleBusClosedForms single_bus_closed_forms_from_targets(double g1, double g2, double omega1,
                                            double omega2, double omega_r);

}  // namespace dispz
