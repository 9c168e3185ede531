#include "dispz/network.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "dispz/errors.hpp"

namespace dispz {

int LinearNetwork::node(const std::string& name) {
    if (name == "gnd" || name == "0") return -1;
    for (int i = 0; i < static_cast<int>(node_names_.size()); ++i)
        if (node_names_[i] == name) return i;
    node_names_.push_back(name);
    return static_cast<int>(node_names_.size()) - 1;
}

int LinearNetwork::find_node(const std::string& name) const {
    if (name == "gnd" || name == "0") return -1;
    for (int i = 0; i < static_cast<int>(node_names_.size()); ++i)
        if (node_names_[i] == name) return i;
    throw InvalidInputError("unknown node '" + name + "'");
}

const std::string& LinearNetwork::node_name(int idx) const {
    static const std::string ground = "gnd";
    if (idx < 0) return ground;
    return node_names_.at(static_cast<std::size_t>(idx));
}

void LinearNetwork::add_capacitor(const std::string& a, const std::string& b, double farad) {
    if (!(farad > 0.0) || !std::isfinite(farad))
        throw InvalidInputError("capacitor value must be positive and finite");
    capacitors_.push_back({node(a), node(b), farad});
}

void LinearNetwork::add_inductor(const std::string& a, const std::string& b, double henry) {
    if (!(henry > 0.0) || !std::isfinite(henry))
        throw InvalidInputError("inductor value must be positive and finite");
    inductors_.push_back({node(a), node(b), henry});
}

void LinearNetwork::add_junction(const std::string& name, const std::string& a,
                                 const std::string& b, double l_j) {
    if (!(l_j > 0.0) || !std::isfinite(l_j))
        throw InvalidInputError("junction inductance must be positive and finite");
    junctions_.push_back({name, node(a), node(b), l_j});
}

void LinearNetwork::add_drive_port(const std::string& name, const std::string& a,
                                   const std::string& b, double z0,
                                   std::optional<double> c_shunt_hint,
                                   std::optional<double> tone_omega) {
    if (!(z0 > 0.0) || !std::isfinite(z0))
        throw InvalidInputError("drive-port impedance must be positive and finite");
    drive_ports_.push_back({name, node(a), node(b), z0, c_shunt_hint, tone_omega});
}

std::vector<std::pair<int, int>> LinearNetwork::ports() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(junctions_.size() + drive_ports_.size());
    for (const auto& j : junctions_) out.emplace_back(j.node_a, j.node_b);
    for (const auto& d : drive_ports_) out.emplace_back(d.node_a, d.node_b);
    return out;
}

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace

void LinearNetwork::validate() const {
    std::set<std::string> names;
    for (const auto& j : junctions_)
        if (!names.insert(j.name).second)
            throw InvalidInputError("duplicate junction name '" + j.name + "'");
    for (const auto& d : drive_ports_)
        if (!names.insert(d.name).second)
            throw InvalidInputError("duplicate drive-port name '" + d.name + "'");

    // connectivity to ground through capacitors, inductors and junctions
    const int n = node_count();
    UnionFind uf(n + 1);  // index n is ground
    auto idx = [n](int node) { return node < 0 ? n : node; };
    for (const auto& c : capacitors_) uf.merge(idx(c.node_a), idx(c.node_b));
    for (const auto& l : inductors_) uf.merge(idx(l.node_a), idx(l.node_b));
    for (const auto& j : junctions_) uf.merge(idx(j.node_a), idx(j.node_b));
    const int ground_root = uf.find(n);
    for (int i = 0; i < n; ++i)
        if (uf.find(i) != ground_root)
            throw InvalidInputError("node '" + node_names_[i] + "' is not connected to ground");
}

}  // namespace dispz
