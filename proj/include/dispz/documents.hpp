#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dispz/network.hpp"
#include "dispz/pole_residue.hpp"

namespace dispz {

/// Pole-residue input with the port bookkeeping needed to analyze it.
struct PoleResidueInput {
    PoleResidueImpedance z;
    int n_qubit_ports = 0;
    std::vector<double> junction_l_j;              // henry, per qubit port
    std::vector<std::string> qubit_names;
    std::vector<double> drive_z0;                  // ohm, per drive port
    std::vector<std::optional<double>> drive_c_shunt;   // farad hints
    std::vector<std::optional<double>> drive_tone_omega;  // rad/s
    std::vector<std::string> drive_names;
};

/// Parses a netlist document (strict mode rejects unknown keys).
LinearNetwork parse_netlist(const nlohmann::json& doc, bool strict = false);
LinearNetwork parse_netlist_file(const std::string& path, bool strict = false);

/// Serializes a network back to document form (values in SI base units).
nlohmann::ordered_json netlist_to_json(const LinearNetwork& net);

/// Parses a pole-residue document.
PoleResidueInput parse_pole_residue(const nlohmann::json& doc, bool strict = false);
PoleResidueInput parse_pole_residue_file(const std::string& path, bool strict = false);

nlohmann::ordered_json pole_residue_to_json(const PoleResidueInput& in);

/// True when the document looks like a pole-residue file ("A0"/"poles" keys)
/// rather than a netlist.
bool is_pole_residue_document(const nlohmann::json& doc);

nlohmann::json load_json_file(const std::string& path);

}  // namespace dispz
