#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "dispz/pipeline.hpp"

namespace dispz {

/// One row of the single-bus bus-frequency sweep (all four J expressions).
struct SingleBusSweepRow {
    double f_r_hz = 0.0;
    double j_z = 0.0;        // rad/s
    double j_rwa_z = 0.0;
    double j_pert = 0.0;
    double j0 = 0.0;
};

/// Bus-frequency sweep with pinned couplings and qubit frequencies.
std::vector<SingleBusSweepRow> single_bus_sweep(double g1, double g2, double f1_hz,
                                             double f2_hz, double fr_from_hz,
                                             double fr_to_hz, int points);

std::string single_bus_sweep_csv(const std::vector<SingleBusSweepRow>& rows);

/// Generic sweep: patch one numeric document field (JSON pointer) across a
/// range, analyze, and pull chosen report fields (JSON pointers into the
/// report document).
struct GenericSweepSpec {
    std::string param_pointer;
    double from = 0.0;
    double to = 0.0;
    int points = 2;
    std::vector<std::string> field_pointers;
    AnalysisOptions opts;
    bool strict = false;
};

std::string generic_sweep_csv(const nlohmann::json& base_doc,
                              const GenericSweepSpec& spec);

/// Formats a CSV cell as %.12e.
std::string csv_number(double v);

}  // namespace dispz
