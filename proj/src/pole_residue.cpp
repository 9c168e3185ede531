#include "dispz/pole_residue.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "dispz/errors.hpp"

namespace dispz {

bool PoleResidueImpedance::has_inductive_stage(double tol) const {
    if (a_inf.size() == 0) return false;
    double scale = a_inf.cwiseAbs().maxCoeff();
    return scale > tol;
}

void PoleResidueEvaluator::check_guard(double omega) const {
    if (omega == 0.0 || !std::isfinite(omega))
        throw InvalidInputError("impedance evaluation requires omega != 0");
    for (const auto& p : z_.poles) {
        if (std::abs(omega - p.omega) < guard_ * p.omega) {
            throw ResonanceProximityError(
                "impedance evaluation within pole guard of mode at " +
                    std::to_string(p.omega) + " rad/s",
                p.omega);
        }
    }
}

Eigen::MatrixXd PoleResidueEvaluator::im_z(double omega) const {
    check_guard(omega);
    Eigen::MatrixXd z = -z_.a0 / omega;
    for (const auto& p : z_.poles)
        z += p.residue * (omega / (p.omega * p.omega - omega * omega));
    if (z_.a_inf.size() != 0) z += z_.a_inf * omega;
    return z;
}

double PoleResidueEvaluator::im_z(int i, int j, double omega) const {
    check_guard(omega);
    double z = -z_.a0(i, j) / omega;
    for (const auto& p : z_.poles)
        z += p.residue(i, j) * (omega / (p.omega * p.omega - omega * omega));
    if (z_.a_inf.size() != 0) z += z_.a_inf(i, j) * omega;
    return z;
}

namespace {
void check_symmetric(const Eigen::MatrixXd& a, const std::string& label,
                     double rel_tol, std::vector<PassivityViolation>& out) {
    if (a.rows() != a.cols()) {
        out.push_back({label + " is not square", 0.0});
        return;
    }
    double norm = a.cwiseAbs().maxCoeff();
    double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (norm > 0.0 && asym > rel_tol * norm)
        out.push_back({label + " is not symmetric", asym / norm});
}
}  // namespace

std::vector<PassivityViolation> check_lossless_passivity(
    const PoleResidueImpedance& z, const Tolerances& tol) {
    std::vector<PassivityViolation> out;
    check_symmetric(z.a0, "A0", tol.symmetry_tol, out);
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
            0.5 * (z.a0 + z.a0.transpose()));
        double min_ev = es.eigenvalues().minCoeff();
        if (!(min_ev > 0.0))
            out.push_back({"A0 is not positive definite", min_ev});
    }
    double prev = 0.0;
    for (std::size_t k = 0; k < z.poles.size(); ++k) {
        const auto& p = z.poles[k];
        const std::string label = "A_" + std::to_string(k + 1);
        if (!(p.omega > 0.0)) {
            out.push_back({label + " has non-positive frequency", p.omega});
            continue;
        }
        if (k > 0 && p.omega - prev <= tol.pole_merge_tol * p.omega)
            out.push_back({"poles " + std::to_string(k) + "," + std::to_string(k + 1) +
                               " closer than pole_merge_tol",
                           (p.omega - prev) / p.omega});
        prev = p.omega;
        check_symmetric(p.residue, label, tol.symmetry_tol, out);
        Eigen::MatrixXd sym = 0.5 * (p.residue + p.residue.transpose());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
        double min_ev = es.eigenvalues().minCoeff();
        double max_ev = es.eigenvalues().maxCoeff();
        if (min_ev < -tol.rank1_tol * std::max(max_ev, 0.0))
            out.push_back({label + " has a negative eigenvalue", min_ev});
        // rank check via singular values; merged poles may carry higher rank
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(sym);
        const auto& s = svd.singularValues();
        int allowed = std::max(1, p.multiplicity);
        if (s.size() > allowed && s(allowed) > tol.rank1_tol * s(0))
            out.push_back({label + " exceeds rank " + std::to_string(allowed),
                           s(allowed) / s(0)});
    }
    if (z.has_inductive_stage())
        out.push_back({"A_inf is nonzero (purely inductive stage)",
                       z.a_inf.cwiseAbs().maxCoeff()});
    return out;
}

}  // namespace dispz
