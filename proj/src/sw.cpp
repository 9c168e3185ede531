#include "dispz/sw.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <unsupported/Eigen/MatrixFunctions>

#include "dispz/errors.hpp"
#include "dispz/mna.hpp"

namespace dispz {

namespace {

double offblock_norm(const Eigen::MatrixXd& m, int n) {
    const int tot = static_cast<int>(m.rows());
    return m.topRightCorner(n, tot - n).norm();
}

void check_denominators(const Eigen::VectorXd& wq, const Eigen::VectorXd& wr,
                        const Tolerances&) {
    for (int i = 0; i < wq.size(); ++i) {
        for (int k = 0; k < wr.size(); ++k) {
            const double d = wq(i) * wq(i) - wr(k) * wr(k);
            if (std::abs(d) < 1e-6 * wq(i) * wq(i))
                throw SingularDenominatorError(
                    "qubit " + std::to_string(i) + " degenerate with mode " +
                    std::to_string(k) + ": |w_i^2 - w_Rk^2| too small");
        }
    }
}

BlockDiagonalResult order2(const Eigen::MatrixXd& m1, const Eigen::VectorXd& wq,
                           const Eigen::VectorXd& wr, const Tolerances& tol) {
    const int n = static_cast<int>(wq.size());
    const int m = static_cast<int>(wr.size());
    check_denominators(wq, wr, tol);
    auto den = [&](int i, int k) { return wq(i) * wq(i) - wr(k) * wr(k); };

    BlockDiagonalResult out;
    out.order = SwOrder::Order2;
    out.n_qubits = n;
    out.m1_tilde = Eigen::MatrixXd::Zero(n + m, n + m);
    // qubit block: literal second-order sum
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double sum = (i == j) ? m1(i, i) : m1(i, j);
            for (int k = 0; k < m; ++k)
                sum += 0.5 * m1(i, n + k) * m1(n + k, j) *
                       (1.0 / den(i, k) + 1.0 / den(j, k));
            out.m1_tilde(i, j) = sum;
        }
    }
    // resonator block keeps its first-order entries plus the mirrored sum
    for (int k = 0; k < m; ++k) {
        for (int k2 = 0; k2 < m; ++k2) {
            double sum = m1(n + k, n + k2);
            for (int i = 0; i < n; ++i)
                sum += 0.5 * m1(n + k, i) * m1(i, n + k2) *
                       (-1.0 / den(i, k) - 1.0 / den(i, k2));
            out.m1_tilde(n + k, n + k2) = sum;
        }
    }
    // first-order generator
    out.s = Eigen::MatrixXd::Zero(n + m, n + m);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < m; ++k) {
            out.s(i, n + k) = -m1(i, n + k) / den(i, k);
            out.s(n + k, i) = m1(i, n + k) / den(i, k);
        }
    }
    Eigen::MatrixXd rotated =
        (-out.s).exp().eval() * m1 * out.s.exp().eval();
    out.residual = offblock_norm(rotated, n);
    return out;
}

BlockDiagonalResult numeric_exact(const Eigen::MatrixXd& m1, int n,
                                  const Tolerances&) {
    const int tot = static_cast<int>(m1.rows());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m1 + m1.transpose()));
    if (es.info() != Eigen::Success)
        throw PhysicsError("eigen-decomposition of M1 failed");

    // pick the n eigenvectors with the largest qubit-subspace weight
    std::vector<int> idx(tot);
    std::iota(idx.begin(), idx.end(), 0);
    Eigen::VectorXd score(tot);
    for (int c = 0; c < tot; ++c)
        score(c) = es.eigenvectors().col(c).head(n).squaredNorm();
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return score(a) > score(b); });

    Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(tot, tot);
    for (int c = 0; c < n; ++c) {
        const auto v = es.eigenvectors().col(idx[c]);
        pi += v * v.transpose();
    }
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(tot, tot);
    p.topLeftCorner(n, n).setIdentity();
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(tot, tot);

    // direct rotation: polar factor of Pi P + (1-Pi)(1-P); least-action
    // block-diagonalizing orthogonal transformation
    Eigen::MatrixXd d = pi * p + (eye - pi) * (eye - p);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::MatrixXd w = svd.matrixU() * svd.matrixV().transpose();

    BlockDiagonalResult out;
    out.order = SwOrder::NumericExact;
    out.n_qubits = n;
    out.m1_tilde = w.transpose() * m1 * w;
    const double scale = m1.norm();
    out.residual = offblock_norm(out.m1_tilde, n);
    int iters = 0;
    while (out.residual > 1e-12 * scale && iters < 100) {
        // polish: repeat the construction on the rotated matrix
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es2(
            0.5 * (out.m1_tilde + out.m1_tilde.transpose()));
        Eigen::VectorXd score2(tot);
        std::vector<int> idx2(tot);
        std::iota(idx2.begin(), idx2.end(), 0);
        for (int c = 0; c < tot; ++c)
            score2(c) = es2.eigenvectors().col(c).head(n).squaredNorm();
        std::sort(idx2.begin(), idx2.end(),
                  [&](int a, int b) { return score2(a) > score2(b); });
        Eigen::MatrixXd pi2 = Eigen::MatrixXd::Zero(tot, tot);
        for (int c = 0; c < n; ++c) {
            const auto v = es2.eigenvectors().col(idx2[c]);
            pi2 += v * v.transpose();
        }
        Eigen::MatrixXd d2 = pi2 * p + (eye - pi2) * (eye - p);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd2(d2,
                                               Eigen::ComputeFullU | Eigen::ComputeFullV);
        Eigen::MatrixXd w2 = svd2.matrixU() * svd2.matrixV().transpose();
        w = w * w2;
        out.m1_tilde = w.transpose() * m1 * w;
        out.residual = offblock_norm(out.m1_tilde, n);
        ++iters;
    }
    if (out.residual > 1e-10 * scale)
        throw PhysicsError("numeric-exact block diagonalization did not converge");
    if (w.determinant() < 0.0) {
        // flip one resonator-space column to stay in SO(n+m)
        w.col(tot - 1) *= -1.0;
        out.m1_tilde = w.transpose() * m1 * w;
    }
    out.s = w.log();
    out.s = 0.5 * (out.s - out.s.transpose().eval());
    return out;
}

}  // namespace

BlockDiagonalResult schrieffer_wolff(const Eigen::MatrixXd& m1,
                                     const Eigen::VectorXd& omega_qubit,
                                     const Eigen::VectorXd& omega_mode_bare,
                                     SwOrder order, const Tolerances& tol) {
    const int n = static_cast<int>(omega_qubit.size());
    const int m = static_cast<int>(omega_mode_bare.size());
    if (m1.rows() != n + m || m1.cols() != n + m)
        throw InvalidInputError("M1 dimension does not match block sizes");
    if ((m1 - m1.transpose()).cwiseAbs().maxCoeff() >
        1e-9 * std::max(1.0, m1.cwiseAbs().maxCoeff()))
        throw InvalidInputError("M1 must be symmetric");
    if (order == SwOrder::Order2) return order2(m1, omega_qubit, omega_mode_bare, tol);
    check_denominators(omega_qubit, omega_mode_bare, tol);
    return numeric_exact(m1, n, tol);
}

Eigen::MatrixXd j_from_blockdiag(const BlockDiagonalResult& r,
                                 const std::vector<QubitMode>& qubits) {
    const int n = r.n_qubits;
    if (static_cast<int>(qubits.size()) != n)
        throw InvalidInputError("qubit count does not match block result");
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (i != k)
                j(i, k) = 0.5 * r.m1_tilde(i, k) /
                          std::sqrt(qubits[i].omega * qubits[k].omega);
    return j;
}

Eigen::MatrixXd drive_projection_D(const Eigen::MatrixXd& m1,
                                   const Eigen::MatrixXd& v,
                                   const Eigen::VectorXd& omega_qubit,
                                   const Eigen::VectorXd& omega_mode_bare,
                                   const Tolerances& tol) {
    const int n = static_cast<int>(omega_qubit.size());
    const int m = static_cast<int>(omega_mode_bare.size());
    if (v.rows() != m) throw InvalidInputError("V row count must match mode count");
    check_denominators(omega_qubit, omega_mode_bare, tol);
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, v.cols());
    for (int i = 0; i < n; ++i) {
        const double wi2 = omega_qubit(i) * omega_qubit(i);
        for (int dcol = 0; dcol < v.cols(); ++dcol) {
            double sum = 0.0;
            for (int k = 0; k < m; ++k)
                sum -= m1(i, n + k) * v(k, dcol) /
                       (wi2 - omega_mode_bare(k) * omega_mode_bare(k));
            d(i, dcol) = sum;
        }
    }
    return d;
}

ExactModes exact_normal_modes(const LinearNetwork& net,
                              const std::vector<double>& junction_inductances,
                              const Tolerances& tol) {
    net.validate();
    NodeMatrices m = assemble_node_matrices(net, &junction_inductances);
    NetworkModes nm = solve_network_modes(m, tol);
    ExactModes out;
    out.omegas = std::move(nm.omegas);
    out.port_projections = std::move(nm.port_projections);
    return out;
}

}  // namespace dispz
