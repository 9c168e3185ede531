// dispz: dispersive effective-Hamiltonian parameters of a superconducting
// chip from its lossless multiport impedance (netlist or pole-residue form).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "dispz/constants.hpp"
#include "dispz/documents.hpp"
#include "dispz/errors.hpp"
#include "dispz/lattice.hpp"
#include "dispz/pipeline.hpp"
#include "dispz/report.hpp"
#include "dispz/sweep.hpp"
#include "dispz/units.hpp"
#include "dispz/validate.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw dispz::Error("cannot write '" + path + "'");
    out << content;
}

std::map<std::string, double> parse_lj_overrides(const std::vector<std::string>& specs) {
    std::map<std::string, double> out;
    for (const auto& s : specs) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw dispz::InvalidInputError("--lj expects name=value, got '" + s + "'");
        out[s.substr(0, eq)] = dispz::parse_quantity(s.substr(eq + 1));
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"dispersive Hamiltonian parameters from a chip's linear network"};
    app.require_subcommand(1);
    app.fallthrough();

    bool strict = false;
    std::string profile = "default";
    std::uint64_t seed = 42;
    app.add_flag("--strict", strict, "reject unknown document keys");
    app.add_option("--tolerance-profile", profile, "default | strict | loose");
    app.add_option("--seed", seed, "seed for randomized commands");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "netlist or pole-residue -> report");
    std::string in_path, out_path;
    std::vector<std::string> lj_specs;
    bool use_mna = false;
    double temperature = 0.0;
    analyze->add_option("input", in_path, "netlist or pole-residue JSON")->required();
    analyze->add_option("--out", out_path, "report JSON path (stdout otherwise)");
    analyze->add_option("--lj", lj_specs, "junction override name=value (e.g. q1=10nH)");
    analyze->add_flag("--use-mna", use_mna, "evaluate formulas on direct MNA impedance");
    analyze->add_option("--temperature", temperature, "chip temperature in kelvin");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "parameter sweep -> CSV");
    std::string sweep_input, sweep_param, sweep_out;
    std::vector<std::string> sweep_fields;
    double from = 0.0, to = 0.0;
    int points = 0;
    bool single_bus = false;
    double g1 = 100e6, g2 = 100e6, f1 = 4.90e9, f2 = 5.10e9;
    sweep->add_flag("--single-bus", single_bus,
                    "two-qubit single-bus closed-form curves vs bus frequency");
    sweep->add_option("input", sweep_input, "base document (generic mode)");
    sweep->add_option("--param", sweep_param, "JSON pointer to the swept field");
    sweep->add_option("--field", sweep_fields, "report JSON pointer(s) to emit");
    sweep->add_option("--from", from, "sweep start (Hz in single-bus mode)")->required();
    sweep->add_option("--to", to, "sweep end")->required();
    sweep->add_option("--points", points, "number of points")->required();
    sweep->add_option("--g1", g1, "qubit-1 coupling, Hz (single-bus)");
    sweep->add_option("--g2", g2, "qubit-2 coupling, Hz (single-bus)");
    sweep->add_option("--f1", f1, "qubit-1 frequency, Hz (single-bus)");
    sweep->add_option("--f2", f2, "qubit-2 frequency, Hz (single-bus)");
    std::string emit = "csv";
    sweep->add_option("--emit", emit, "output format (csv)");
    sweep->add_option("--out", sweep_out, "CSV path (stdout otherwise)");

    // lattice
    auto* lattice = app.add_subcommand("lattice", "generate a 2xN device and analyze it");
    int rows = 2, cols = 8;
    std::string buses = "two-qubit", params_path, lattice_out, lattice_report;
    bool with_readout = false, lattice_analyze = true;
    lattice->add_option("--rows", rows, "lattice rows (2)");
    lattice->add_option("--cols", cols, "lattice columns");
    lattice->add_option("--buses", buses, "two-qubit | four-qubit");
    lattice->add_flag("--with-readout", with_readout,
                      "attach readout resonator + drive port per qubit");
    lattice->add_option("--params", params_path, "parameter JSON file");
    lattice->add_option("--out", lattice_out, "netlist JSON path");
    lattice->add_option("--report", lattice_report, "report JSON path");
    lattice->add_flag("!--no-analyze", lattice_analyze, "only emit the netlist");

    // validate
    auto* validate = app.add_subcommand("validate", "closed forms vs Schrieffer-Wolff oracle");
    int circuits = 100;
    double gmax_ratio = 0.05;
    validate->add_option("--circuits", circuits, "number of random circuits");
    validate->add_option("--gmax-ratio", gmax_ratio, "aggregate dispersive ratio bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    dispz::AnalysisOptions opts;
    opts.tol = dispz::tolerance_profile(profile);

    if (*analyze) {
        opts.use_mna = use_mna;
        opts.temperature_kelvin = temperature;
        opts.lj_overrides = parse_lj_overrides(lj_specs);
        nlohmann::json doc = dispz::load_json_file(in_path);
        dispz::AnalysisResult res;
        if (dispz::is_pole_residue_document(doc))
            res = dispz::analyze_pole_residue(dispz::parse_pole_residue(doc, strict), opts);
        else
            res = dispz::analyze_network(dispz::parse_netlist(doc, strict), opts);
        const std::string json_text =
            dispz::dump_json_fixed(dispz::report_to_json(res.report));
        if (out_path.empty()) {
            std::cout << json_text;
        } else {
            write_file(out_path, json_text);
            std::cout << dispz::report_to_text(res.report);
        }
        return 0;
    }

    if (*sweep) {
        if (emit != "csv")
            throw dispz::InvalidInputError("only --emit csv is supported");
        std::string csv;
        if (single_bus) {
            auto rows_out = dispz::single_bus_sweep(
                dispz::constants::two_pi * g1, dispz::constants::two_pi * g2, f1, f2,
                from, to, points);
            csv = dispz::single_bus_sweep_csv(rows_out);
        } else {
            if (sweep_input.empty() || sweep_param.empty())
                throw dispz::InvalidInputError(
                    "generic sweep needs an input document and --param");
            dispz::GenericSweepSpec spec;
            spec.param_pointer = sweep_param;
            spec.from = from;
            spec.to = to;
            spec.points = points;
            spec.field_pointers = sweep_fields;
            spec.opts = opts;
            spec.strict = strict;
            csv = dispz::generic_sweep_csv(dispz::load_json_file(sweep_input), spec);
        }
        if (sweep_out.empty())
            std::cout << csv;
        else
            write_file(sweep_out, csv);
        return 0;
    }

    if (*lattice) {
        dispz::LatticeParams p;
        if (!params_path.empty()) p = dispz::lattice_params_from_json_file(params_path);
        p.rows = rows;
        p.cols = cols;
        p.with_readout = with_readout;
        if (buses == "two-qubit")
            p.bus_mode = dispz::BusMode::TwoQubit;
        else if (buses == "four-qubit")
            p.bus_mode = dispz::BusMode::FourQubit;
        else
            throw dispz::InvalidInputError("--buses must be two-qubit or four-qubit");

        dispz::LatticeBuild b = dispz::build_lattice(p);
        const std::string netlist_text =
            dispz::dump_json_fixed(dispz::netlist_to_json(b.net));
        if (!lattice_out.empty())
            write_file(lattice_out, netlist_text);
        else if (!lattice_analyze)
            std::cout << netlist_text;
        std::cout << "lattice: " << b.n_qubits << " qubits, " << b.n_buses
                  << " buses" << (p.with_readout ? ", readout + drive per qubit" : "")
                  << "\n";
        if (!lattice_analyze) return 0;

        // long-range J/X tails survive only the direct MNA evaluation
        dispz::AnalysisOptions lattice_opts = opts;
        lattice_opts.use_mna = true;
        dispz::AnalysisResult res = dispz::analyze_network(b.net, lattice_opts);
        if (!lattice_report.empty())
            write_file(lattice_report,
                       dispz::dump_json_fixed(dispz::report_to_json(res.report)));

        // J_1k decay table and fit
        std::vector<double> ks, logj;
        std::cout << "J_1k decay (upper row):\n";
        for (int k = 1; k < p.cols; ++k) {
            const double jval = res.report.j(0, k);
            std::printf("  J(1,%d) = %+.6e MHz\n", k + 1,
                        jval / (dispz::constants::two_pi * 1e6));
            ks.push_back(k + 1);
            logj.push_back(std::log10(std::abs(jval)));
        }
        auto jfit = dispz::linear_fit(ks, logj);
        std::printf("  log10|J_1k| fit: slope %+.4f /qubit, R^2 = %.6f\n", jfit.slope,
                    jfit.r2);
        if (p.with_readout) {
            std::cout << "X_1k crosstalk (upper row):\n";
            std::vector<double> xk;
            for (int k = 1; k < p.cols; ++k) {
                const double x = res.report.crosstalk_db(0, k);
                std::printf("  X(1,%d) = %+.3f dB\n", k + 1, x);
                xk.push_back(x);
            }
            auto xfit = dispz::linear_fit(ks, xk);
            std::printf("  X_1k fit: slope %+.4f dB/qubit, R^2 = %.6f\n", xfit.slope,
                        xfit.r2);
        }
        return 0;
    }

    if (*validate) {
        auto summary = dispz::run_validation(circuits, seed, gmax_ratio, opts.tol);
        std::cout << summary.to_text();
        if (!summary.pass()) throw dispz::ValidationFailure("validation thresholds exceeded");
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dispz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
