#include "dispz/pipeline.hpp"

#include <cmath>

#include "dispz/dispersive.hpp"
#include "dispz/errors.hpp"
#include "dispz/mna.hpp"

namespace dispz {

namespace {

std::vector<double> resolve_lj(const LinearNetwork& net,
                               const AnalysisOptions& opts) {
    std::vector<double> out;
    for (const auto& j : net.junctions()) {
        auto it = opts.lj_overrides.find(j.name);
        out.push_back(it != opts.lj_overrides.end() ? it->second : j.l_j);
    }
    return out;
}

}  // namespace

AnalysisResult analyze_realization(CauerRealization realization,
                                   const std::vector<double>& junction_l_j,
                                   const std::vector<std::string>& qubit_names,
                                   const std::vector<double>& drive_z0,
                                   const std::vector<std::optional<double>>& drive_c_hint,
                                   const std::vector<std::optional<double>>& drive_tone,
                                   const std::vector<std::string>& drive_names,
                                   const AnalysisOptions& opts,
                                   std::shared_ptr<ImZEvaluator> formula_eval) {
    const int n = realization.n_qubits;
    const int nd = realization.n_drives;
    const int m = realization.n_modes();
    if (static_cast<int>(junction_l_j.size()) != n)
        throw InvalidInputError("need one junction inductance per qubit port (got " +
                                std::to_string(junction_l_j.size()) + ", want " +
                                std::to_string(n) + ")");
    if (n == 0) throw InvalidInputError("no qubit ports");

    AnalysisResult res;
    res.realization = std::move(realization);
    const auto& cr = res.realization;

    DispersiveReport& rep = res.report;
    rep.warnings = cr.warnings;

    for (int i = 0; i < n; ++i) {
        QubitMode q = solve_qubit_mode(junction_l_j[i], cr.c0(i), opts.tol);
        q.index = i;
        q.name = i < static_cast<int>(qubit_names.size()) ? qubit_names[i]
                                                          : "q" + std::to_string(i);
        for (const auto& w : q.warnings) rep.warnings.push_back(q.name + ": " + w);
        res.qubits.push_back(std::move(q));
    }
    rep.qubits = res.qubits;

    if (!formula_eval)
        formula_eval = std::make_shared<PoleResidueEvaluator>(cr.to_pole_residue(),
                                                              opts.tol.pole_guard);
    res.z_eval = formula_eval;

    // dispersive-regime guard
    rep.g = Eigen::MatrixXd::Zero(n, m);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < m; ++k) {
            rep.g(i, k) = bare_coupling_g(cr, res.qubits[i], k, opts.tol,
                                          &rep.warnings);
            const double detuning = std::abs(res.qubits[i].omega - cr.modes[k].omega);
            const double gmag = std::abs(rep.g(i, k));
            if (gmag == 0.0) continue;
            if (detuning < opts.tol.dispersive_error_ratio * gmag)
                throw DispersiveViolationError(
                    "qubit " + res.qubits[i].name + " is within " +
                    std::to_string(detuning / gmag) +
                    " g of internal mode " + std::to_string(k) +
                    "; dispersive treatment invalid");
            if (detuning < opts.tol.dispersive_warn_ratio * gmag)
                rep.warnings.push_back("qubit " + res.qubits[i].name +
                                       " only " + std::to_string(detuning / gmag) +
                                       " g away from internal mode " +
                                       std::to_string(k));
        }
    }

    rep.mode_omegas.resize(m);
    rep.mode_multiplicity.assign(m, 1);
    for (int k = 0; k < m; ++k) rep.mode_omegas[k] = cr.modes[k].omega;
    for (int k = 0; k < m; ++k) {
        int count = 0;
        for (int k2 = 0; k2 < m; ++k2)
            if (cr.modes[k2].omega == cr.modes[k].omega) ++count;
        rep.mode_multiplicity[k] = count;
    }

    const ImZEvaluator& z = *res.z_eval;
    rep.j = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int jx = i + 1; jx < n; ++jx) {
            double val = exchange_coupling_J(z, res.qubits[i], res.qubits[jx]);
            rep.j(i, jx) = val;
            rep.j(jx, i) = val;
        }

    rep.chi = Eigen::MatrixXd::Zero(n, m);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k)
            rep.chi(i, k) =
                dispersive_shift_chi(res.qubits[i], rep.g(i, k), cr.modes[k].omega);

    if (m == 1) {
        rep.j0_direct = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int jx = 0; jx < n; ++jx)
                if (i != jx)
                    rep.j0_direct(i, jx) = direct_capacitive_J0(
                        rep.g(i, 0), rep.g(jx, 0), cr.modes[0].omega);
    }

    if (nd > 0) {
        // coupling magnitudes at the qubit frequencies decide tone defaults
        // and the crosstalk drive assignment
        Eigen::MatrixXd imz_qd(n, nd);
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < nd; ++d)
                imz_qd(i, d) = z.im_z(i, n + d, res.qubits[i].omega);

        std::vector<int> channel_owner(nd, 0);
        for (int d = 0; d < nd; ++d) {
            DriveChannel ch;
            ch.index = d;
            ch.name = d < static_cast<int>(drive_names.size())
                          ? drive_names[d]
                          : "d" + std::to_string(d);
            ch.port_index = n + d;
            ch.z0 = d < static_cast<int>(drive_z0.size()) ? drive_z0[d] : 50.0;
            ch.c_pd = (d < static_cast<int>(drive_c_hint.size()) && drive_c_hint[d])
                          ? *drive_c_hint[d]
                          : cr.c_drive(d);
            int owner = 0;
            imz_qd.col(d).cwiseAbs().maxCoeff(&owner);
            channel_owner[d] = owner;
            ch.omega_d = (d < static_cast<int>(drive_tone.size()) && drive_tone[d])
                             ? *drive_tone[d]
                             : res.qubits[owner].omega;
            rep.drives.push_back(ch);
        }

        rep.drive_assignment.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            int best = 0;
            imz_qd.row(i).cwiseAbs().maxCoeff(&best);
            rep.drive_assignment[i] = best;
        }

        rep.eps_abs = Eigen::MatrixXd::Zero(n, nd);
        rep.eps_phase = Eigen::MatrixXd::Zero(n, nd);
        rep.purcell = Eigen::MatrixXd::Zero(n, nd);
        rep.purcell_total.assign(n, 0.0);
        for (int i = 0; i < n; ++i) {
            for (int d = 0; d < nd; ++d) {
                auto eps = drive_coupling_epsilon(z, res.qubits[i], rep.drives[d]);
                rep.eps_abs(i, d) = std::abs(eps);
                rep.eps_phase(i, d) = std::arg(eps);
                rep.purcell(i, d) = purcell_rate(z, res.qubits[i], rep.drives[d],
                                                 opts.temperature_kelvin);
                rep.purcell_total[i] += rep.purcell(i, d);
            }
        }

        auto xt = crosstalk_by_channel(z, res.qubits, rep.drives, channel_owner,
                                       opts.tol);
        rep.crosstalk_db = xt.x_db;
        rep.crosstalk_prefactor_db = xt.prefactor_db;
        for (auto& w : xt.warnings) rep.warnings.push_back(std::move(w));

        for (int d = 0; d < nd; ++d) {
            auto bath = bath_spectrum(rep.drives[d],
                                      bath_coupling_norm(z, res.qubits, rep.drives[d]),
                                      opts.tol);
            if (!bath.simplified_valid)
                rep.warnings.push_back(
                    "bath spectrum simplification invalid for drive " +
                    rep.drives[d].name + " (correction " +
                    std::to_string(bath.correction / rep.drives[d].c_pd) +
                    " of C_pd)");
        }
    } else {
        rep.crosstalk_db = Eigen::MatrixXd::Zero(0, 0);
        rep.crosstalk_prefactor_db = Eigen::MatrixXd::Zero(0, 0);
    }

    return res;
}

AnalysisResult analyze_network(const LinearNetwork& net, const AnalysisOptions& opts) {
    net.validate();
    if (net.junctions().empty()) throw InvalidInputError("no qubit ports");

    ModalDecomposition modal = extract_modes(net, opts.tol);
    PoleResidueImpedance z = modal.to_pole_residue(opts.tol);

    auto violations = check_lossless_passivity(z, opts.tol);
    for (const auto& v : violations) {
        if (v.what.find("pole_merge_tol") != std::string::npos) continue;
        throw PhysicsError("extracted impedance fails passivity: " + v.what);
    }

    CauerRealization cr =
        synthesize(z, net.n_qubit_ports(), net.n_drive_ports(), opts.tol);

    std::vector<std::string> qubit_names;
    for (const auto& j : net.junctions()) qubit_names.push_back(j.name);
    std::vector<double> drive_z0;
    std::vector<std::optional<double>> hints, tones;
    std::vector<std::string> drive_names;
    for (const auto& d : net.drive_ports()) {
        drive_z0.push_back(d.z0);
        hints.push_back(d.c_shunt_hint);
        tones.push_back(d.tone_omega);
        drive_names.push_back(d.name);
    }

    std::shared_ptr<ImZEvaluator> formula_eval;
    if (opts.use_mna)
        formula_eval = std::make_shared<MnaEvaluator>(net, opts.tol);

    AnalysisResult res =
        analyze_realization(std::move(cr), resolve_lj(net, opts), qubit_names,
                            drive_z0, hints, tones, drive_names, opts, formula_eval);
    res.modal = std::move(modal);
    return res;
}

AnalysisResult analyze_pole_residue(const PoleResidueInput& input,
                                    const AnalysisOptions& opts) {
    auto violations = check_lossless_passivity(input.z, opts.tol);
    for (const auto& v : violations) {
        if (v.what.find("pole_merge_tol") != std::string::npos) continue;
        throw PhysicsError("pole-residue input fails passivity: " + v.what);
    }
    const int nd = input.z.n_ports - input.n_qubit_ports;
    CauerRealization cr = synthesize(input.z, input.n_qubit_ports, nd, opts.tol);

    std::vector<double> lj = input.junction_l_j;
    if (static_cast<int>(lj.size()) != input.n_qubit_ports)
        throw InvalidInputError(
            "pole-residue analysis requires one junction_L_J per qubit port");
    // name-based overrides (names default to q0..qN-1)
    std::vector<std::string> names = input.qubit_names;
    for (int i = static_cast<int>(names.size()); i < input.n_qubit_ports; ++i)
        names.push_back("q" + std::to_string(i));
    for (int i = 0; i < input.n_qubit_ports; ++i) {
        auto it = opts.lj_overrides.find(names[i]);
        if (it != opts.lj_overrides.end()) lj[i] = it->second;
    }

    return analyze_realization(std::move(cr), lj, names, input.drive_z0,
                               input.drive_c_shunt, input.drive_tone_omega,
                               input.drive_names, opts);
}

}  // namespace dispz
