#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dispz {

/// Lumped lossless LC network with Josephson junction branches and drive
/// ports. Qubit ports are implicitly the junction node pairs; the junction
/// itself is removed whenever the impedance is evaluated.
class LinearNetwork {
public:
    struct TwoTerminal {
        int node_a = -1;  // -1 is ground
        int node_b = -1;
        double value = 0.0;  // farad or henry
    };
    struct Junction {
        std::string name;
        int node_a = -1;
        int node_b = -1;
        double l_j = 0.0;  // henry
    };
    struct DrivePort {
        std::string name;
        int node_a = -1;
        int node_b = -1;
        double z0 = 50.0;  // ohm
        std::optional<double> c_shunt_hint;      // farad
        std::optional<double> tone_omega;        // rad/s
    };

    /// Returns the index for `name`, creating the node on first use.
    /// "gnd" and "0" map to the ground index -1.
    int node(const std::string& name);
    int find_node(const std::string& name) const;  // throws if absent
    int node_count() const { return static_cast<int>(node_names_.size()); }
    const std::string& node_name(int idx) const;

    void add_capacitor(const std::string& a, const std::string& b, double farad);
    void add_inductor(const std::string& a, const std::string& b, double henry);
    void add_junction(const std::string& name, const std::string& a,
                      const std::string& b, double l_j);
    void add_drive_port(const std::string& name, const std::string& a,
                        const std::string& b, double z0,
                        std::optional<double> c_shunt_hint = std::nullopt,
                        std::optional<double> tone_omega = std::nullopt);

    const std::vector<TwoTerminal>& capacitors() const { return capacitors_; }
    const std::vector<TwoTerminal>& inductors() const { return inductors_; }
    const std::vector<Junction>& junctions() const { return junctions_; }
    const std::vector<DrivePort>& drive_ports() const { return drive_ports_; }
    const std::vector<std::string>& node_names() const { return node_names_; }

    int n_qubit_ports() const { return static_cast<int>(junctions_.size()); }
    int n_drive_ports() const { return static_cast<int>(drive_ports_.size()); }
    int n_ports() const { return n_qubit_ports() + n_drive_ports(); }

    /// Port node pairs, qubit ports first then drive ports.
    std::vector<std::pair<int, int>> ports() const;

    /// Checks element positivity, unique names, and connectivity to ground.
    void validate() const;

private:
    std::vector<std::string> node_names_;
    std::vector<TwoTerminal> capacitors_;
    std::vector<TwoTerminal> inductors_;
    std::vector<Junction> junctions_;
    std::vector<DrivePort> drive_ports_;
};

}  // namespace dispz
