#include "dispz/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

#include "dispz/constants.hpp"

namespace dispz {

using nlohmann::ordered_json;

namespace {

constexpr double kTwoPi = constants::two_pi;

ordered_json matrix(const Eigen::MatrixXd& m, double scale = 1.0) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j) * scale);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

ordered_json report_to_json(const DispersiveReport& r) {
    ordered_json doc;
    doc["schema"] = "dispz-report/1";
    doc["generator"] = "dispz 0.1.0";  // constant sidecar, no timestamps
    doc["n_qubits"] = r.n_qubits();
    doc["n_modes"] = r.n_modes();
    doc["n_drives"] = r.n_drives();

    doc["qubits"] = ordered_json::array();
    for (const auto& q : r.qubits) {
        ordered_json e;
        e["index"] = q.index;
        e["name"] = q.name;
        e["L_J_H"] = q.l_j;
        e["C_F"] = q.c;
        e["E_C_over_h_Hz"] = q.ec_over_h;
        e["f_J_GHz"] = q.omega_j / (kTwoPi * 1e9);
        e["f_GHz"] = q.omega / (kTwoPi * 1e9);
        e["omega_J_rad_s"] = q.omega_j;
        e["omega_rad_s"] = q.omega;
        e["L_H"] = q.l;
        e["delta_rad_s"] = q.delta;
        e["delta_over_2pi_MHz"] = q.delta / (kTwoPi * 1e6);
        doc["qubits"].push_back(e);
    }

    doc["modes"] = ordered_json::array();
    for (std::size_t k = 0; k < r.mode_omegas.size(); ++k) {
        ordered_json e;
        e["index"] = static_cast<int>(k);
        e["f_GHz"] = r.mode_omegas[k] / (kTwoPi * 1e9);
        e["omega_rad_s"] = r.mode_omegas[k];
        e["L_R_H"] = 1.0 / (r.mode_omegas[k] * r.mode_omegas[k]);
        e["multiplicity"] =
            k < r.mode_multiplicity.size() ? r.mode_multiplicity[k] : 1;
        doc["modes"].push_back(e);
    }

    doc["g_rad_s"] = matrix(r.g);
    doc["g_MHz"] = matrix(r.g, 1.0 / (kTwoPi * 1e6));
    doc["J_rad_s"] = matrix(r.j);
    doc["J_MHz"] = matrix(r.j, 1.0 / (kTwoPi * 1e6));
    doc["chi_rad_s"] = matrix(r.chi);
    doc["chi_MHz"] = matrix(r.chi, 1.0 / (kTwoPi * 1e6));
    if (r.j0_direct.size() != 0) {
        doc["J0_direct_rad_s"] = matrix(r.j0_direct);
        doc["J0_direct_MHz"] = matrix(r.j0_direct, 1.0 / (kTwoPi * 1e6));
    }

    if (!r.drives.empty()) {
        doc["drives"] = ordered_json::array();
        for (const auto& d : r.drives) {
            ordered_json e;
            e["index"] = d.index;
            e["name"] = d.name;
            e["port_index"] = d.port_index;
            e["Z0_ohm"] = d.z0;
            e["C_shunt_F"] = d.c_pd;
            e["tone_f_GHz"] = d.omega_d / (kTwoPi * 1e9);
            e["theta_rad"] = d.theta();
            doc["drives"].push_back(e);
        }
        doc["drive_assignment"] = r.drive_assignment;
        doc["epsilon_abs_rad_s_per_V"] = matrix(r.eps_abs);
        doc["epsilon_phase_rad"] = matrix(r.eps_phase);
        doc["crosstalk_dB"] = matrix(r.crosstalk_db);
        doc["crosstalk_prefactor_dB"] = matrix(r.crosstalk_prefactor_db);
        doc["purcell_rates_per_s"] = matrix(r.purcell);
        doc["purcell_total_per_s"] = r.purcell_total;
        ordered_json t1 = ordered_json::array();
        for (double rate : r.purcell_total)
            t1.push_back(rate > 0.0 ? 1.0 / rate
                                    : std::numeric_limits<double>::quiet_NaN());
        doc["t1_seconds"] = t1;
    }

    doc["warnings"] = r.warnings;
    return doc;
}

namespace {

void dump_rec(const ordered_json& v, std::string& out, int indent) {
    const std::string pad(indent, ' ');
    switch (v.type()) {
        case nlohmann::detail::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + "  " + ordered_json(it.key()).dump() + ": ";
                dump_rec(it.value(), out, indent + 2);
            }
            out += "\n" + pad + "}";
            return;
        }
        case nlohmann::detail::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& item : v) {
                if (!first) out += ",\n";
                first = false;
                out += pad + "  ";
                dump_rec(item, out, indent + 2);
            }
            out += "\n" + pad + "]";
            return;
        }
        case nlohmann::detail::value_t::number_float: {
            const double d = v.get<double>();
            if (std::isnan(d) || std::isinf(d)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.12e", d);
            out += buf;
            return;
        }
        default:
            out += v.dump();
            return;
    }
}

}  // namespace

std::string dump_json_fixed(const ordered_json& doc) {
    std::string out;
    dump_rec(doc, out, 0);
    out += "\n";
    return out;
}

std::string report_to_text(const DispersiveReport& r) {
    std::ostringstream os;
    char buf[160];
    os << "qubits:\n";
    for (const auto& q : r.qubits) {
        std::snprintf(buf, sizeof(buf),
                      "  %-8s f = %.6f GHz  (f_J = %.6f)  delta/2pi = %+.3f MHz  "
                      "L = %.4f nH  E_C/h = %.4f GHz\n",
                      q.name.c_str(), q.omega / (kTwoPi * 1e9),
                      q.omega_j / (kTwoPi * 1e9), q.delta / (kTwoPi * 1e6),
                      q.l * 1e9, q.ec_over_h / 1e9);
        os << buf;
    }
    os << "internal modes:\n";
    for (std::size_t k = 0; k < r.mode_omegas.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "  mode %-3zu f = %.6f GHz\n", k,
                      r.mode_omegas[k] / (kTwoPi * 1e9));
        os << buf;
    }
    os << "J (MHz):\n";
    for (int i = 0; i < r.j.rows(); ++i) {
        os << " ";
        for (int jx = 0; jx < r.j.cols(); ++jx) {
            std::snprintf(buf, sizeof(buf), " %+10.4f", r.j(i, jx) / (kTwoPi * 1e6));
            os << buf;
        }
        os << "\n";
    }
    os << "chi (MHz):\n";
    for (int i = 0; i < r.chi.rows(); ++i) {
        os << " ";
        for (int k = 0; k < r.chi.cols(); ++k) {
            std::snprintf(buf, sizeof(buf), " %+10.4f", r.chi(i, k) / (kTwoPi * 1e6));
            os << buf;
        }
        os << "\n";
    }
    if (!r.drives.empty()) {
        os << "drives:\n";
        for (const auto& d : r.drives) {
            std::snprintf(buf, sizeof(buf),
                          "  %-8s port %d  Z0 = %.1f Ohm  C_pd = %.2f fF  tone = %.4f GHz\n",
                          d.name.c_str(), d.port_index, d.z0, d.c_pd * 1e15,
                          d.omega_d / (kTwoPi * 1e9));
            os << buf;
        }
        os << "Purcell totals (1/s):\n ";
        for (double rate : r.purcell_total) {
            std::snprintf(buf, sizeof(buf), " %.4e", rate);
            os << buf;
        }
        os << "\n";
    }
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

}  // namespace dispz
