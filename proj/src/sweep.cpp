#include "dispz/sweep.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>

#include "dispz/constants.hpp"
#include "dispz/dispersive.hpp"
#include "dispz/errors.hpp"
#include "dispz/report.hpp"
#include "dispz/units.hpp"

namespace dispz {

using nlohmann::json;

std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::vector<SingleBusSweepRow> single_bus_sweep(double g1, double g2, double f1_hz,
                                             double f2_hz, double fr_from_hz,
                                             double fr_to_hz, int points) {
    if (points < 1) throw InvalidInputError("sweep needs at least one point");
    const double w1 = constants::two_pi * f1_hz;
    const double w2 = constants::two_pi * f2_hz;
    std::vector<SingleBusSweepRow> rows;
    rows.reserve(points);
    for (int i = 0; i < points; ++i) {
        const double f = points == 1
                             ? fr_from_hz
                             : fr_from_hz + (fr_to_hz - fr_from_hz) * i / (points - 1);
        SingleBusClosedForms r =
            single_bus_closed_forms_from_targets(g1, g2, w1, w2, constants::two_pi * f);
        rows.push_back({f, r.j_z, r.j_rwa_z, r.j_pert, r.j0});
    }
    return rows;
}

std::string single_bus_sweep_csv(const std::vector<SingleBusSweepRow>& rows) {
    std::string out = "f_r_GHz,J_Z_MHz,J_RWA_Z_MHz,J_pert_MHz,J_pert_plus_J0_MHz\n";
    const double mhz = constants::two_pi * 1e6;
    for (const auto& r : rows) {
        out += csv_number(r.f_r_hz / 1e9) + "," + csv_number(r.j_z / mhz) + "," +
               csv_number(r.j_rwa_z / mhz) + "," + csv_number(r.j_pert / mhz) + "," +
               csv_number((r.j_pert + r.j0) / mhz) + "\n";
    }
    return out;
}

std::string generic_sweep_csv(const json& base_doc, const GenericSweepSpec& spec) {
    if (spec.points < 1) throw InvalidInputError("sweep needs at least one point");
    if (spec.field_pointers.empty())
        throw InvalidInputError("sweep needs at least one report field");

    json::json_pointer param(spec.param_pointer);
    {
        // the target must exist and hold a single numeric quantity
        const json& probe = base_doc.at(param);
        if (probe.is_string())
            parse_quantity(probe.get<std::string>());  // throws if not a quantity
        else if (!probe.is_number())
            throw InvalidInputError("sweep parameter at '" + spec.param_pointer +
                                    "' is not numeric");
    }

    std::string out = "param";
    for (const auto& f : spec.field_pointers) out += "," + f;
    out += "\n";

    for (int i = 0; i < spec.points; ++i) {
        const double v =
            spec.points == 1
                ? spec.from
                : spec.from + (spec.to - spec.from) * i / (spec.points - 1);
        json doc = base_doc;
        doc[param] = v;
        AnalysisResult res;
        if (is_pole_residue_document(doc))
            res = analyze_pole_residue(parse_pole_residue(doc, spec.strict), spec.opts);
        else
            res = analyze_network(parse_netlist(doc, spec.strict), spec.opts);
        json rep = report_to_json(res.report);
        out += csv_number(v);
        for (const auto& f : spec.field_pointers) {
            const json& cell = rep.at(json::json_pointer(f));
            if (!cell.is_number())
                throw InvalidInputError("report field '" + f + "' is not numeric");
            out += "," + csv_number(cell.get<double>());
        }
        out += "\n";
    }
    return out;
}

}  // namespace dispz
