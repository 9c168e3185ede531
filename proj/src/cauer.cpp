#include "dispz/cauer.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <cmath>

#include "dispz/errors.hpp"

namespace dispz {

Eigen::MatrixXd CauerRealization::r_matrix() const {
    Eigen::MatrixXd r(n_modes(), n_qubits);
    for (int k = 0; k < n_modes(); ++k) r.row(k) = modes[k].r_normalized().transpose();
    return r;
}

Eigen::MatrixXd CauerRealization::v_matrix() const {
    Eigen::MatrixXd v(n_modes(), n_drives);
    for (int k = 0; k < n_modes(); ++k) v.row(k) = modes[k].v_normalized().transpose();
    return v;
}

PoleResidueImpedance CauerRealization::to_pole_residue() const {
    const int n = n_qubits + n_drives;
    PoleResidueImpedance z;
    z.n_ports = n;
    z.a0 = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n_qubits; ++i) z.a0(i, i) = 1.0 / c0(i);
    for (int d = 0; d < n_drives; ++d)
        z.a0(n_qubits + d, n_qubits + d) = 1.0 / c_drive(d);
    z.a_inf = Eigen::MatrixXd::Zero(n, n);
    for (const auto& m : modes) {
        Eigen::VectorXd row(n);
        row.head(n_qubits) = m.r_normalized();
        row.tail(n_drives) = m.v_normalized();
        PoleResidueImpedance::Pole p;
        p.omega = m.omega;
        p.residue = row * row.transpose();
        z.poles.push_back(std::move(p));
    }
    // merge rows sharing a pole frequency exactly (multi-row degenerate modes)
    std::vector<PoleResidueImpedance::Pole> merged;
    for (auto& p : z.poles) {
        if (!merged.empty() && merged.back().omega == p.omega) {
            merged.back().residue += p.residue;
            merged.back().multiplicity += 1;
        } else {
            merged.push_back(std::move(p));
        }
    }
    z.poles = std::move(merged);
    return z;
}

CauerRealization synthesize(const PoleResidueImpedance& z, int n_qubit_ports,
                            int n_drive_ports, const Tolerances& tol,
                            double c_r_scale) {
    if (z.n_ports != n_qubit_ports + n_drive_ports)
        throw InvalidInputError("port split does not match decomposition size");
    if (z.has_inductive_stage())
        throw UnsupportedInductiveStageError(
            "A_inf != 0: the purely inductive stage is not supported "
            "(Born-Oppenheimer elimination is out of scope)");

    auto violations = check_lossless_passivity(z, tol);
    for (const auto& v : violations) {
        if (v.what.find("pole_merge_tol") != std::string::npos) continue;
        throw InvalidResidueError("pole-residue input rejected: " + v.what);
    }

    // strict-diagonal capacitive stage (U = identity)
    const int n = z.n_ports;
    double diag_max = z.a0.diagonal().cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && std::abs(z.a0(i, j)) > 1e-10 * diag_max)
                throw UnsupportedDirectCapacitiveCouplingError(
                    "A0 has off-diagonal entries (direct electrostatic coupling "
                    "between ports). Strict-diagonal mode rejects this input; the "
                    "non-diagonal stage would require the small-epsilon treatment "
                    "of the capacitive residue, which is not implemented.");

    CauerRealization c;
    c.n_qubits = n_qubit_ports;
    c.n_drives = n_drive_ports;
    c.c0.resize(n_qubit_ports);
    c.c_drive.resize(n_drive_ports);
    for (int i = 0; i < n_qubit_ports; ++i) {
        if (!(z.a0(i, i) > 0.0))
            throw InvalidResidueError("A0 diagonal must be positive");
        c.c0(i) = 1.0 / z.a0(i, i);
    }
    for (int d = 0; d < n_drive_ports; ++d) {
        if (!(z.a0(n_qubit_ports + d, n_qubit_ports + d) > 0.0))
            throw InvalidResidueError("A0 diagonal must be positive");
        c.c_drive(d) = 1.0 / z.a0(n_qubit_ports + d, n_qubit_ports + d);
    }

    for (std::size_t k = 0; k < z.poles.size(); ++k) {
        const auto& p = z.poles[k];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
            0.5 * (p.residue + p.residue.transpose()));
        // eigenvalues ascending; rows from the top `multiplicity` eigenpairs
        const int allowed = std::max(1, p.multiplicity);
        const double sigma_max = es.eigenvalues()(n - 1);
        if (!(sigma_max > 0.0))
            throw InvalidResidueError("residue " + std::to_string(k + 1) +
                                      " is not positive semidefinite");
        if (n > allowed) {
            double extra = es.eigenvalues()(n - 1 - allowed);
            if (extra > tol.rank1_tol * sigma_max)
                throw InvalidResidueError(
                    "residue " + std::to_string(k + 1) + " violates rank-" +
                    std::to_string(allowed) + " beyond tolerance (ratio " +
                    std::to_string(extra / sigma_max) + ")");
        }
        if (p.multiplicity > 1)
            c.warnings.push_back("merged pole at " + std::to_string(p.omega) +
                                 " rad/s synthesized with " +
                                 std::to_string(p.multiplicity) + " transformer rows");
        for (int m = 0; m < allowed; ++m) {
            double sigma = es.eigenvalues()(n - 1 - m);
            if (sigma <= tol.rank1_tol * sigma_max && m > 0) continue;
            Eigen::VectorXd row = std::sqrt(std::max(sigma, 0.0)) *
                                  es.eigenvectors().col(n - 1 - m);
            // deterministic sign: first non-negligible component positive
            for (int i = 0; i < n; ++i) {
                if (std::abs(row(i)) > 1e-12 * row.norm()) {
                    if (row(i) < 0.0) row = -row;
                    break;
                }
            }
            CauerRealization::ModeRow mr;
            mr.omega = p.omega;
            mr.c_r = c_r_scale;
            mr.r = std::sqrt(c_r_scale) * row.head(n_qubit_ports);
            mr.v = std::sqrt(c_r_scale) * row.tail(n_drive_ports);
            c.modes.push_back(std::move(mr));
        }
    }
    return c;
}

FrameMatrices build_frames(const CauerRealization& c,
                           const std::vector<QubitMode>& qubits) {
    const int nq = c.n_qubits;
    const int m = c.n_modes();
    if (static_cast<int>(qubits.size()) != nq)
        throw InvalidInputError("qubit count does not match synthesis");

    FrameMatrices f;
    f.omega_j.resize(nq);
    for (int i = 0; i < nq; ++i) f.omega_j(i) = qubits[i].omega;
    f.omega_r.resize(m);
    for (int k = 0; k < m; ++k) f.omega_r(k) = c.modes[k].omega;

    const Eigen::MatrixXd r = c.r_matrix();  // normalized rows: C_R = 1 frame
    Eigen::VectorXd c0 = c.c0;
    Eigen::VectorXd c0h = c0.cwiseSqrt();

    f.c_full = Eigen::MatrixXd::Zero(nq + m, nq + m);
    f.c_full.topLeftCorner(nq, nq) = c0.asDiagonal();
    f.c_full.topRightCorner(nq, m) = -(c0.asDiagonal() * r.transpose());
    f.c_full.bottomLeftCorner(m, nq) = -(r * c0.asDiagonal());
    f.c_full.bottomRightCorner(m, m) =
        Eigen::MatrixXd::Identity(m, m) + r * c0.asDiagonal() * r.transpose();

    f.m0 = Eigen::MatrixXd::Zero(nq + m, nq + m);
    for (int i = 0; i < nq; ++i) f.m0(i, i) = 1.0 / qubits[i].l;
    for (int k = 0; k < m; ++k) f.m0(nq + k, nq + k) = f.omega_r(k) * f.omega_r(k);

    // capacitance rescaling Phi_J -> C0^{1/2} Phi_J
    f.c_rescaled = Eigen::MatrixXd::Zero(nq + m, nq + m);
    f.c_rescaled.topLeftCorner(nq, nq) = Eigen::MatrixXd::Identity(nq, nq);
    f.c_rescaled.topRightCorner(nq, m) = -(c0h.asDiagonal() * r.transpose());
    f.c_rescaled.bottomLeftCorner(m, nq) = -(r * c0h.asDiagonal());
    f.c_rescaled.bottomRightCorner(m, m) = f.c_full.bottomRightCorner(m, m);

    f.t = Eigen::MatrixXd::Identity(nq + m, nq + m);
    f.t.topRightCorner(nq, m) = c0h.asDiagonal() * r.transpose();

    Eigen::VectorXd wj2 = f.omega_j.array().square();
    Eigen::VectorXd wr2 = f.omega_r.array().square();
    Eigen::MatrixXd rc = r * c0h.asDiagonal();  // M x N
    f.m1 = Eigen::MatrixXd::Zero(nq + m, nq + m);
    f.m1.topLeftCorner(nq, nq) = wj2.asDiagonal();
    f.m1.topRightCorner(nq, m) = wj2.asDiagonal() * rc.transpose();
    f.m1.bottomLeftCorner(m, nq) = rc * wj2.asDiagonal();
    f.m1.bottomRightCorner(m, m) =
        Eigen::MatrixXd(wr2.asDiagonal()) + rc * wj2.asDiagonal() * rc.transpose();
    return f;
}

Eigen::MatrixXd cauer_im_z(const CauerRealization& c, double omega) {
    if (omega == 0.0 || !std::isfinite(omega))
        throw InvalidInputError("impedance evaluation requires omega != 0");
    const int np = c.n_qubits + c.n_drives;
    const int m = c.n_modes();
    // physical turns-ratio matrix over all ports
    Eigen::MatrixXd w(m, np);
    for (int k = 0; k < m; ++k) {
        w.row(k).head(c.n_qubits) = c.modes[k].r.transpose();
        w.row(k).tail(c.n_drives) = c.modes[k].v.transpose();
    }
    Eigen::VectorXd cs(np);
    cs.head(c.n_qubits) = c.c0;
    cs.tail(c.n_drives) = c.c_drive;

    Eigen::MatrixXd cfull = Eigen::MatrixXd::Zero(np + m, np + m);
    cfull.topLeftCorner(np, np) = cs.asDiagonal();
    cfull.topRightCorner(np, m) = -(cs.asDiagonal() * w.transpose());
    cfull.bottomLeftCorner(m, np) = -(w * cs.asDiagonal());
    cfull.bottomRightCorner(m, m) = w * cs.asDiagonal() * w.transpose();
    Eigen::MatrixXd mfull = Eigen::MatrixXd::Zero(np + m, np + m);
    for (int k = 0; k < m; ++k) {
        cfull(np + k, np + k) += c.modes[k].c_r;
        mfull(np + k, np + k) = 1.0 / c.modes[k].l_r();
    }
    Eigen::MatrixXd e = Eigen::MatrixXd::Zero(np + m, np);
    e.topLeftCorner(np, np).setIdentity();
    Eigen::MatrixXd a = mfull - omega * omega * cfull;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    Eigen::MatrixXd x = lu.solve(e);
    return omega * (e.transpose() * x);
}

double bare_coupling_g(const CauerRealization& c, const QubitMode& q, int mode_k,
                       const Tolerances& tol, std::vector<std::string>* warnings) {
    if (mode_k < 0 || mode_k >= c.n_modes())
        throw InvalidInputError("mode index out of range");
    if (q.index < 0 || q.index >= c.n_qubits)
        throw InvalidInputError("qubit index out of range");
    const double rki = c.modes[mode_k].r_normalized()(q.index);
    const double small = rki * std::sqrt(q.c);
    if (warnings && std::abs(small) > tol.coupling_warn)
        warnings->push_back("r_ki sqrt(C_i) = " + std::to_string(small) +
                            " exceeds dispersive smallness for qubit " +
                            std::to_string(q.index) + ", mode " +
                            std::to_string(mode_k));
    return 0.5 * std::sqrt(q.omega * c.modes[mode_k].omega) * small;
}

}  // namespace dispz
