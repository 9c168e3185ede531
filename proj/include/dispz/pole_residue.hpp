#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dispz/tolerances.hpp"

namespace dispz {

/// Lossless multiport impedance as a partial-fraction expansion of Im[Z]:
///   Im[Z](w) = -A0/w + sum_k A_k w / (w_Rk^2 - w^2) + A_inf w
/// Sign convention is the physics one (e^{-i w t}); a bare capacitor gives
/// Im[Z] = -1/(wC). A0 is in 1/farad, A_k in ohm rad/s, A_inf in henry.
struct PoleResidueImpedance {
    struct Pole {
        double omega = 0.0;       // rad/s
        Eigen::MatrixXd residue;  // n_ports x n_ports, PSD, normally rank 1
        int multiplicity = 1;     // >1 when merged from degenerate modes
    };

    int n_ports = 0;
    Eigen::MatrixXd a0;    // n_ports x n_ports, SPD
    std::vector<Pole> poles;  // strictly increasing omega
    Eigen::MatrixXd a_inf;    // zero when absent

    bool has_inductive_stage(double tol = 1e-14) const;
};

/// Common interface for Im[Z] providers (pole-residue evaluation, direct MNA,
/// closed forms). Implementations throw ResonanceProximityError inside the
/// pole guard.
class ImZEvaluator {
public:
    virtual ~ImZEvaluator() = default;
    virtual int n_ports() const = 0;
    virtual Eigen::MatrixXd im_z(double omega) const = 0;
    virtual double im_z(int i, int j, double omega) const {
        return im_z(omega)(i, j);
    }
};

class PoleResidueEvaluator final : public ImZEvaluator {
public:
    explicit PoleResidueEvaluator(PoleResidueImpedance z, double pole_guard = 1e-9)
        : z_(std::move(z)), guard_(pole_guard) {}
    int n_ports() const override { return z_.n_ports; }
    Eigen::MatrixXd im_z(double omega) const override;
    double im_z(int i, int j, double omega) const override;
    const PoleResidueImpedance& decomposition() const { return z_; }

private:
    void check_guard(double omega) const;
    PoleResidueImpedance z_;
    double guard_;
};

/// One entry of the lossless-passivity diagnostic report.
struct PassivityViolation {
    std::string what;
    double magnitude = 0.0;
};

/// Verifies A0 > 0, A_k >= 0, symmetry of all residues, rank-1 residues
/// (except merged poles), and strictly increasing pole frequencies.
/// Diagnostic only: returns the violation list instead of throwing.
std::vector<PassivityViolation> check_lossless_passivity(
    const PoleResidueImpedance& z, const Tolerances& tol = {});

}  // namespace dispz
