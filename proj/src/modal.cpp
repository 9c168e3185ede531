#include "dispz/modal.hpp"

#include <cmath>

#include "dispz/errors.hpp"
#include "dispz/mna.hpp"

namespace dispz {

ModalDecomposition extract_modes(const LinearNetwork& net, const Tolerances& tol) {
    net.validate();
    ModalDecomposition out;
    out.n_ports = net.n_ports();
    if (out.n_ports == 0) throw InvalidInputError("network has no ports");

    NodeMatrices m = assemble_node_matrices(net);
    NetworkModes nm = solve_network_modes(m, tol);
    out.a0 = dc_port_elastance(net);

    // drop modes that do not couple to any port
    double max_norm = 0.0;
    for (const auto& v : nm.port_projections)
        max_norm = std::max(max_norm, v.squaredNorm());
    for (std::size_t k = 0; k < nm.omegas.size(); ++k) {
        if (max_norm > 0.0 &&
            nm.port_projections[k].squaredNorm() <= tol.residue_drop_tol * max_norm)
            continue;
        out.modes.push_back({nm.omegas[k], nm.port_projections[k]});
    }
    return out;
}

PoleResidueImpedance ModalDecomposition::to_pole_residue(const Tolerances& tol) const {
    PoleResidueImpedance z;
    z.n_ports = n_ports;
    z.a0 = a0;
    z.a_inf = Eigen::MatrixXd::Zero(n_ports, n_ports);
    std::size_t k = 0;
    while (k < modes.size()) {
        std::size_t j = k + 1;
        double w_ref = modes[k].omega;
        Eigen::MatrixXd residue =
            modes[k].residue_vector * modes[k].residue_vector.transpose();
        double w_sum = modes[k].omega;
        while (j < modes.size() && modes[j].omega - w_ref <= tol.pole_merge_tol * w_ref) {
            residue += modes[j].residue_vector * modes[j].residue_vector.transpose();
            w_sum += modes[j].omega;
            w_ref = modes[j].omega;
            ++j;
        }
        PoleResidueImpedance::Pole p;
        p.multiplicity = static_cast<int>(j - k);
        p.omega = w_sum / static_cast<double>(p.multiplicity);
        p.residue = residue;
        z.poles.push_back(std::move(p));
        k = j;
    }
    return z;
}

}  // namespace dispz
