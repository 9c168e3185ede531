#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "dispz/cauer.hpp"
#include "dispz/documents.hpp"
#include "dispz/modal.hpp"
#include "dispz/network.hpp"
#include "dispz/report.hpp"
#include "dispz/tolerances.hpp"

namespace dispz {

struct AnalysisOptions {
    Tolerances tol;
    /// Use direct MNA evaluation for the dispersive formulas instead of the
    /// pole-residue form (netlist inputs only; both must agree).
    bool use_mna = false;
    /// Junction inductance overrides by junction name.
    std::map<std::string, double> lj_overrides;
    /// Optional chip temperature for the coth multiplier on Purcell rates.
    double temperature_kelvin = 0.0;
};

/// Everything the analysis derived, for callers that need more than the
/// report (tests, sweep internals).
struct AnalysisResult {
    DispersiveReport report;
    ModalDecomposition modal;          // netlist inputs only
    CauerRealization realization;
    std::vector<QubitMode> qubits;
    std::shared_ptr<ImZEvaluator> z_eval;
};

AnalysisResult analyze_network(const LinearNetwork& net,
                               const AnalysisOptions& opts = {});

AnalysisResult analyze_pole_residue(const PoleResidueInput& input,
                                    const AnalysisOptions& opts = {});

/// Shared back half of the pipeline: from a synthesized realization and
/// qubit inductances to the report.
AnalysisResult analyze_realization(CauerRealization realization,
                                   const std::vector<double>& junction_l_j,
                                   const std::vector<std::string>& qubit_names,
                                   const std::vector<double>& drive_z0,
                                   const std::vector<std::optional<double>>& drive_c_hint,
                                   const std::vector<std::optional<double>>& drive_tone,
                                   const std::vector<std::string>& drive_names,
                                   const AnalysisOptions& opts,
                                   std::shared_ptr<ImZEvaluator> formula_eval = nullptr);

}  // namespace dispz
