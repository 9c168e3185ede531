#include "dispz/documents.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>

#include "dispz/constants.hpp"
#include "dispz/errors.hpp"
#include "dispz/units.hpp"

namespace dispz {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

double quantity(const json& v, const std::string& what) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_quantity(v.get<std::string>());
    throw ParseError(what + " must be a number or a 'number unit' string");
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where, bool strict) {
    if (!strict) return;
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ParseError("unknown key '" + it.key() + "' in " + where +
                             " (strict mode)");
}

std::pair<std::string, std::string> node_pair(const json& entry,
                                              const std::string& ground,
                                              const std::string& where) {
    if (!entry.contains("nodes") || !entry["nodes"].is_array() ||
        entry["nodes"].size() != 2)
        throw ParseError(where + " needs a two-element 'nodes' array");
    auto canon = [&](std::string n) {
        return n == ground ? std::string("gnd") : n;
    };
    return {canon(entry["nodes"][0].get<std::string>()),
            canon(entry["nodes"][1].get<std::string>())};
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("JSON parse error in '" + path + "': " + e.what());
    }
}

bool is_pole_residue_document(const json& doc) {
    return doc.is_object() && doc.contains("A0") && doc.contains("n_ports");
}

LinearNetwork parse_netlist(const json& doc, bool strict) {
    if (!doc.is_object()) throw ParseError("netlist document must be a JSON object");
    check_keys(doc, {"ground", "elements", "junctions", "drive_ports"},
               "netlist document", strict);
    const std::string ground = doc.value("ground", std::string("gnd"));

    LinearNetwork net;
    for (const auto& e : doc.value("elements", json::array())) {
        check_keys(e, {"type", "nodes", "value"}, "element entry", strict);
        const std::string type = e.value("type", std::string());
        auto [a, b] = node_pair(e, ground, "element");
        if (!e.contains("value")) throw ParseError("element entry missing 'value'");
        const double value = quantity(e["value"], "element value");
        if (type == "C")
            net.add_capacitor(a, b, value);
        else if (type == "L")
            net.add_inductor(a, b, value);
        else
            throw ParseError("element type must be 'C' or 'L', got '" + type + "'");
    }
    for (const auto& e : doc.value("junctions", json::array())) {
        check_keys(e, {"name", "nodes", "L_J"}, "junction entry", strict);
        if (!e.contains("name") || !e.contains("L_J"))
            throw ParseError("junction entry needs 'name' and 'L_J'");
        auto [a, b] = node_pair(e, ground, "junction");
        net.add_junction(e["name"].get<std::string>(), a, b,
                         quantity(e["L_J"], "junction L_J"));
    }
    for (const auto& e : doc.value("drive_ports", json::array())) {
        check_keys(e, {"name", "nodes", "Z0", "C_shunt_hint", "tone_frequency"},
                   "drive-port entry", strict);
        if (!e.contains("name")) throw ParseError("drive-port entry needs 'name'");
        auto [a, b] = node_pair(e, ground, "drive port");
        std::optional<double> hint;
        if (e.contains("C_shunt_hint"))
            hint = quantity(e["C_shunt_hint"], "C_shunt_hint");
        std::optional<double> tone;
        if (e.contains("tone_frequency"))
            tone = constants::two_pi *
                   quantity(e["tone_frequency"], "tone_frequency");
        net.add_drive_port(e["name"].get<std::string>(), a, b,
                           e.contains("Z0") ? quantity(e["Z0"], "Z0") : 50.0, hint,
                           tone);
    }
    if (net.junctions().empty())
        throw ParseError("netlist has no junctions: no qubit ports");
    net.validate();
    return net;
}

LinearNetwork parse_netlist_file(const std::string& path, bool strict) {
    return parse_netlist(load_json_file(path), strict);
}

ordered_json netlist_to_json(const LinearNetwork& net) {
    ordered_json doc;
    doc["ground"] = "gnd";
    doc["elements"] = ordered_json::array();
    for (const auto& c : net.capacitors())
        doc["elements"].push_back({{"type", "C"},
                                   {"nodes", {net.node_name(c.node_a), net.node_name(c.node_b)}},
                                   {"value", c.value}});
    for (const auto& l : net.inductors())
        doc["elements"].push_back({{"type", "L"},
                                   {"nodes", {net.node_name(l.node_a), net.node_name(l.node_b)}},
                                   {"value", l.value}});
    doc["junctions"] = ordered_json::array();
    for (const auto& j : net.junctions())
        doc["junctions"].push_back({{"name", j.name},
                                    {"nodes", {net.node_name(j.node_a), net.node_name(j.node_b)}},
                                    {"L_J", j.l_j}});
    doc["drive_ports"] = ordered_json::array();
    for (const auto& d : net.drive_ports()) {
        ordered_json entry = {{"name", d.name},
                              {"nodes", {net.node_name(d.node_a), net.node_name(d.node_b)}},
                              {"Z0", d.z0}};
        if (d.c_shunt_hint) entry["C_shunt_hint"] = *d.c_shunt_hint;
        if (d.tone_omega)
            entry["tone_frequency"] = *d.tone_omega / constants::two_pi;
        doc["drive_ports"].push_back(entry);
    }
    return doc;
}

namespace {
Eigen::MatrixXd parse_matrix(const json& m, int n, const std::string& what) {
    if (!m.is_array() || static_cast<int>(m.size()) != n)
        throw ParseError(what + " must be a " + std::to_string(n) + "x" +
                         std::to_string(n) + " row-major matrix");
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = m[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(what + " row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j) out(i, j) = row[j].get<double>();
    }
    return out;
}
}  // namespace

PoleResidueInput parse_pole_residue(const json& doc, bool strict) {
    if (!doc.is_object())
        throw ParseError("pole-residue document must be a JSON object");
    check_keys(doc,
               {"n_ports", "A0", "poles", "A_inf", "n_qubit_ports", "qubit_names",
                "junction_L_J", "drive_Z0", "drive_C_shunt", "drive_tone_f_GHz",
                "drive_names"},
               "pole-residue document", strict);
    if (!doc.contains("n_ports")) throw ParseError("missing 'n_ports'");
    const int n = doc["n_ports"].get<int>();
    if (n <= 0) throw ParseError("'n_ports' must be positive");

    PoleResidueInput in;
    in.z.n_ports = n;
    if (!doc.contains("A0")) throw ParseError("missing 'A0'");
    in.z.a0 = parse_matrix(doc["A0"], n, "A0");
    in.z.a_inf = Eigen::MatrixXd::Zero(n, n);
    if (doc.contains("A_inf")) in.z.a_inf = parse_matrix(doc["A_inf"], n, "A_inf");
    for (const auto& p : doc.value("poles", json::array())) {
        check_keys(p, {"f_GHz", "A"}, "pole entry", strict);
        if (!p.contains("f_GHz") || !p.contains("A"))
            throw ParseError("pole entry needs 'f_GHz' and 'A'");
        PoleResidueImpedance::Pole pole;
        pole.omega = constants::two_pi * p["f_GHz"].get<double>() * 1e9;
        pole.residue = parse_matrix(p["A"], n, "pole residue");
        in.z.poles.push_back(std::move(pole));
    }
    std::sort(in.z.poles.begin(), in.z.poles.end(),
              [](const auto& a, const auto& b) { return a.omega < b.omega; });

    in.n_qubit_ports = doc.value("n_qubit_ports", n);
    if (in.n_qubit_ports < 0 || in.n_qubit_ports > n)
        throw ParseError("'n_qubit_ports' out of range");
    for (const auto& v : doc.value("junction_L_J", json::array()))
        in.junction_l_j.push_back(quantity(v, "junction_L_J entry"));
    for (const auto& v : doc.value("qubit_names", json::array()))
        in.qubit_names.push_back(v.get<std::string>());
    const int nd = n - in.n_qubit_ports;
    in.drive_z0.assign(nd, 50.0);
    if (doc.contains("drive_Z0")) {
        const auto& arr = doc["drive_Z0"];
        if (static_cast<int>(arr.size()) != nd)
            throw ParseError("'drive_Z0' length must equal drive-port count");
        for (int d = 0; d < nd; ++d) in.drive_z0[d] = quantity(arr[d], "drive_Z0");
    }
    in.drive_c_shunt.assign(nd, std::nullopt);
    if (doc.contains("drive_C_shunt")) {
        const auto& arr = doc["drive_C_shunt"];
        if (static_cast<int>(arr.size()) != nd)
            throw ParseError("'drive_C_shunt' length must equal drive-port count");
        for (int d = 0; d < nd; ++d)
            if (!arr[d].is_null()) in.drive_c_shunt[d] = quantity(arr[d], "drive_C_shunt");
    }
    in.drive_tone_omega.assign(nd, std::nullopt);
    if (doc.contains("drive_tone_f_GHz")) {
        const auto& arr = doc["drive_tone_f_GHz"];
        if (static_cast<int>(arr.size()) != nd)
            throw ParseError("'drive_tone_f_GHz' length must equal drive-port count");
        for (int d = 0; d < nd; ++d)
            if (!arr[d].is_null())
                in.drive_tone_omega[d] = constants::two_pi * arr[d].get<double>() * 1e9;
    }
    for (const auto& v : doc.value("drive_names", json::array()))
        in.drive_names.push_back(v.get<std::string>());
    return in;
}

PoleResidueInput parse_pole_residue_file(const std::string& path, bool strict) {
    return parse_pole_residue(load_json_file(path), strict);
}

namespace {
ordered_json matrix_to_json(const Eigen::MatrixXd& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}
}  // namespace

ordered_json pole_residue_to_json(const PoleResidueInput& in) {
    ordered_json doc;
    doc["n_ports"] = in.z.n_ports;
    doc["A0"] = matrix_to_json(in.z.a0);
    doc["poles"] = ordered_json::array();
    for (const auto& p : in.z.poles)
        doc["poles"].push_back({{"f_GHz", p.omega / (constants::two_pi * 1e9)},
                                {"A", matrix_to_json(p.residue)}});
    if (in.z.a_inf.size() != 0 && in.z.a_inf.cwiseAbs().maxCoeff() > 0.0)
        doc["A_inf"] = matrix_to_json(in.z.a_inf);
    doc["n_qubit_ports"] = in.n_qubit_ports;
    if (!in.junction_l_j.empty()) doc["junction_L_J"] = in.junction_l_j;
    if (!in.qubit_names.empty()) doc["qubit_names"] = in.qubit_names;
    if (!in.drive_z0.empty()) doc["drive_Z0"] = in.drive_z0;
    return doc;
}

}  // namespace dispz
