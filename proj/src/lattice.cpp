#include "dispz/lattice.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "dispz/constants.hpp"
#include "dispz/documents.hpp"
#include "dispz/errors.hpp"
#include "dispz/units.hpp"

namespace dispz {

LatticeParams lattice_params_from_json_file(const std::string& path) {
    nlohmann::json doc = load_json_file(path);
    LatticeParams p;
    auto q = [&](const char* key, double fallback) {
        if (!doc.contains(key)) return fallback;
        const auto& v = doc[key];
        return v.is_string() ? parse_quantity(v.get<std::string>()) : v.get<double>();
    };
    p.f_qubit_hz = q("f_qubit", p.f_qubit_hz);
    p.c_qubit = q("C_qubit", p.c_qubit);
    p.f_bus_hz = q("f_bus", p.f_bus_hz);
    p.c_bus = q("C_bus", p.c_bus);
    p.c_coupling = q("C_coupling", p.c_coupling);
    p.f_readout_hz = q("f_readout", p.f_readout_hz);
    p.c_readout = q("C_readout", p.c_readout);
    p.c_readout_coupling = q("C_readout_coupling", p.c_readout_coupling);
    p.c_kappa = q("C_kappa", p.c_kappa);
    p.c_drive = q("C_drive", p.c_drive);
    p.z0 = q("Z0", p.z0);
    return p;
}

namespace {
/// L_J hitting the renormalized target frequency for shunt capacitance c.
double lj_for_target(double f_target_hz, double c) {
    const double w = constants::two_pi * f_target_hz;
    const double ec = charging_energy_rad(c);
    const double denom = 1.0 - 2.0 * ec / w;
    if (!(denom > 0.0))
        throw InvalidInputError("qubit target frequency too low for its E_C");
    const double wj2 = w * w / denom;
    return 1.0 / (wj2 * c);
}
}  // namespace

LatticeBuild build_lattice(const LatticeParams& p) {
    if (p.rows != 2 || p.cols < 2)
        throw InvalidInputError("unsupported lattice dimensions (need rows = 2, cols >= 2)");

    LatticeBuild b;
    b.n_qubits = p.rows * p.cols;
    LinearNetwork& net = b.net;

    auto qnode = [&](int i) { return "q" + std::to_string(i + 1); };

    for (int i = 0; i < b.n_qubits; ++i)
        net.add_capacitor(qnode(i), "gnd", p.c_qubit);

    std::vector<std::vector<int>> buses;
    if (p.bus_mode == BusMode::TwoQubit) {
        for (int r = 0; r < p.rows; ++r)
            for (int c = 0; c + 1 < p.cols; ++c)
                buses.push_back({r * p.cols + c, r * p.cols + c + 1});
        for (int c = 0; c < p.cols; ++c) buses.push_back({c, p.cols + c});
    } else {
        for (int c = 0; c + 1 < p.cols; ++c)
            buses.push_back({c, c + 1, p.cols + c, p.cols + c + 1});
    }
    b.n_buses = static_cast<int>(buses.size());

    const double w_bus = constants::two_pi * p.f_bus_hz;
    const double l_bus = 1.0 / (w_bus * w_bus * p.c_bus);
    for (std::size_t k = 0; k < buses.size(); ++k) {
        const std::string bn = "bus" + std::to_string(k + 1);
        net.add_capacitor(bn, "gnd", p.c_bus);
        net.add_inductor(bn, "gnd", l_bus);
        for (int q : buses[k]) net.add_capacitor(qnode(q), bn, p.c_coupling);
    }

    if (p.with_readout) {
        const double w_ro = constants::two_pi * p.f_readout_hz;
        const double l_ro = 1.0 / (w_ro * w_ro * p.c_readout);
        for (int i = 0; i < b.n_qubits; ++i) {
            const std::string rn = "ro" + std::to_string(i + 1);
            const std::string dn = "dp" + std::to_string(i + 1);
            net.add_capacitor(rn, "gnd", p.c_readout);
            net.add_inductor(rn, "gnd", l_ro);
            net.add_capacitor(qnode(i), rn, p.c_readout_coupling);
            net.add_capacitor(rn, dn, p.c_kappa);
            net.add_capacitor(dn, "gnd", p.c_drive);
        }
    }

    // per-qubit DC shunt capacitance: own cap + couplers (bus and readout
    // nodes are inductively grounded at DC)
    std::vector<int> bus_count(b.n_qubits, 0);
    for (const auto& bq : buses)
        for (int q : bq) bus_count[q]++;
    for (int i = 0; i < b.n_qubits; ++i) {
        double ci = p.c_qubit + bus_count[i] * p.c_coupling +
                    (p.with_readout ? p.c_readout_coupling : 0.0);
        net.add_junction(qnode(i), qnode(i), "gnd", lj_for_target(p.f_qubit_hz, ci));
    }
    if (p.with_readout)
        for (int i = 0; i < b.n_qubits; ++i)
            net.add_drive_port("P" + std::to_string(i + 1),
                               "dp" + std::to_string(i + 1), "gnd", p.z0);
    return b;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw InvalidInputError("linear fit needs two or more points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LinearFit f;
    f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    f.intercept = (sy - f.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double ymean = sy / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double fit = f.slope * x[i] + f.intercept;
        ss_res += (y[i] - fit) * (y[i] - fit);
        ss_tot += (y[i] - ymean) * (y[i] - ymean);
    }
    f.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return f;
}

}  // namespace dispz
