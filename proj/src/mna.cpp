#include "dispz/mna.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "dispz/errors.hpp"

namespace dispz {

namespace {
void stamp(Eigen::MatrixXd& m, int a, int b, double val) {
    if (a >= 0) m(a, a) += val;
    if (b >= 0) m(b, b) += val;
    if (a >= 0 && b >= 0) {
        m(a, b) -= val;
        m(b, a) -= val;
    }
}
}  // namespace

NodeMatrices assemble_node_matrices(const LinearNetwork& net,
                                    const std::vector<double>* junction_inductances) {
    const int n = net.node_count();
    NodeMatrices m;
    m.c = Eigen::MatrixXd::Zero(n, n);
    m.gamma = Eigen::MatrixXd::Zero(n, n);
    for (const auto& c : net.capacitors()) stamp(m.c, c.node_a, c.node_b, c.value);
    for (const auto& l : net.inductors()) stamp(m.gamma, l.node_a, l.node_b, 1.0 / l.value);
    if (junction_inductances) {
        const auto& js = net.junctions();
        if (junction_inductances->size() != js.size())
            throw InvalidInputError("junction inductance list does not match junction count");
        for (std::size_t i = 0; i < js.size(); ++i)
            stamp(m.gamma, js[i].node_a, js[i].node_b, 1.0 / (*junction_inductances)[i]);
    }
    const auto ports = net.ports();
    m.b = Eigen::MatrixXd::Zero(n, static_cast<int>(ports.size()));
    for (int p = 0; p < static_cast<int>(ports.size()); ++p) {
        if (ports[p].first >= 0) m.b(ports[p].first, p) += 1.0;
        if (ports[p].second >= 0) m.b(ports[p].second, p) -= 1.0;
    }
    return m;
}

Eigen::MatrixXd dc_port_elastance(const LinearNetwork& net,
                                  const std::vector<double>* junction_inductances) {
    const int n = net.node_count();
    // union-find over inductor branches; index n is ground
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto idx = [n](int node) { return node < 0 ? n : node; };
    for (const auto& l : net.inductors())
        parent[find(idx(l.node_a))] = find(idx(l.node_b));
    if (junction_inductances)
        for (const auto& j : net.junctions())
            parent[find(idx(j.node_a))] = find(idx(j.node_b));

    std::vector<int> group(n + 1, -1);
    int n_groups = 0;
    for (int i = 0; i <= n; ++i) {
        int r = find(i);
        if (group[r] < 0) group[r] = n_groups++;
        group[i] = group[r];
    }
    const int ground_group = group[n];

    // reduced index per group, ground group eliminated
    std::vector<int> reduced_of_group(n_groups, -1);
    int nr = 0;
    for (int g = 0; g < n_groups; ++g)
        if (g != ground_group) reduced_of_group[g] = nr++;
    auto reduced = [&](int node) { return reduced_of_group[group[idx(node)]]; };

    Eigen::MatrixXd cr = Eigen::MatrixXd::Zero(nr, nr);
    for (const auto& c : net.capacitors())
        stamp(cr, reduced(c.node_a), reduced(c.node_b), c.value);

    const auto ports = net.ports();
    Eigen::MatrixXd br = Eigen::MatrixXd::Zero(nr, static_cast<int>(ports.size()));
    for (int p = 0; p < static_cast<int>(ports.size()); ++p) {
        int a = reduced(ports[p].first), b = reduced(ports[p].second);
        if (a >= 0) br(a, p) += 1.0;
        if (b >= 0) br(b, p) -= 1.0;
    }
    if (nr == 0) return Eigen::MatrixXd::Zero(ports.size(), ports.size());
    Eigen::LDLT<Eigen::MatrixXd> ldlt(cr);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
        throw PhysicsError("DC capacitance matrix is singular; a port lacks a capacitive path");
    Eigen::MatrixXd x = ldlt.solve(br);
    return br.transpose() * x;
}

MnaEvaluator::MnaEvaluator(const LinearNetwork& net, const Tolerances& tol)
    : m_(assemble_node_matrices(net)), guard_(tol.pole_guard) {
    const int n = m_.c.rows();
    if (n == 0) return;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esc(m_.c);
    double cmax = esc.eigenvalues().maxCoeff();
    double cmin = esc.eigenvalues().minCoeff();
    if (cmin <= 1e-14 * cmax) {
        c_singular_ = true;
        // port incidence overlapping null(C) means a pole at infinity
        for (int k = 0; k < n; ++k) {
            if (esc.eigenvalues()(k) <= 1e-14 * cmax) {
                if ((m_.b.transpose() * esc.eigenvectors().col(k)).cwiseAbs().maxCoeff() >
                    1e-12)
                    inductive_port_stage_ = true;
            }
        }
        return;  // resonance list unavailable without C^{-1/2}
    }
    Eigen::MatrixXd cinv_h = esc.operatorInverseSqrt();
    Eigen::MatrixXd k = cinv_h * m_.gamma * cinv_h;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esk(0.5 * (k + k.transpose()));
    double lmax = std::max(esk.eigenvalues().maxCoeff(), 0.0);
    for (int i = 0; i < n; ++i) {
        double l = esk.eigenvalues()(i);
        if (l > lmax * 1e-12 && l > 0.0) resonances_.push_back(std::sqrt(l));
    }
    std::sort(resonances_.begin(), resonances_.end());
}

Eigen::MatrixXd MnaEvaluator::im_z(double omega) const {
    if (omega == 0.0 || !std::isfinite(omega))
        throw InvalidInputError("impedance evaluation requires omega != 0");
    for (double w : resonances_) {
        if (std::abs(std::abs(omega) - w) < guard_ * w)
            throw ResonanceProximityError(
                "impedance evaluation within pole guard of resonance at " +
                    std::to_string(w) + " rad/s",
                w);
    }
    Eigen::MatrixXd a = m_.gamma - omega * omega * m_.c;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    Eigen::MatrixXd x = lu.solve(m_.b);
    double resid = (a * x - m_.b).cwiseAbs().maxCoeff();
    if (!(resid < 1e-6 * std::max(1.0, m_.b.cwiseAbs().maxCoeff()))) {
        double nearest = resonances_.empty() ? omega : resonances_.front();
        for (double w : resonances_)
            if (std::abs(w - omega) < std::abs(nearest - omega)) nearest = w;
        throw ResonanceProximityError("singular nodal matrix at omega = " +
                                          std::to_string(omega) + " rad/s",
                                      nearest);
    }
    return omega * (m_.b.transpose() * x);
}

NetworkModes solve_network_modes(const NodeMatrices& m, const Tolerances& tol) {
    NetworkModes out;
    const int n = m.c.rows();
    if (n == 0) return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esc(m.c);
    if (esc.eigenvalues().minCoeff() <= 1e-14 * esc.eigenvalues().maxCoeff())
        throw UnsupportedInductiveStageError(
            "node capacitance matrix is singular (purely inductive stage); "
            "cannot extract modes");
    Eigen::MatrixXd cinv_h = esc.operatorInverseSqrt();
    Eigen::MatrixXd k = cinv_h * m.gamma * cinv_h;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> esk(0.5 * (k + k.transpose()));
    const auto& lam = esk.eigenvalues();
    double lmax = std::max(lam.maxCoeff(), 0.0);
    if (lmax == 0.0) return out;  // purely capacitive network
    const double lcut = tol.zero_mode_tol * tol.zero_mode_tol * lmax;
    for (int i = 0; i < n; ++i) {
        if (lam(i) > lcut) {
            out.omegas.push_back(std::sqrt(lam(i)));
            out.port_projections.push_back(m.b.transpose() * (cinv_h * esk.eigenvectors().col(i)));
        }
    }
    return out;
}

}  // namespace dispz
