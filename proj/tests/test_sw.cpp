#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "dispz/cauer.hpp"
#include "dispz/constants.hpp"
#include "dispz/dispersive.hpp"
#include "dispz/errors.hpp"
#include "dispz/modal.hpp"
#include "dispz/sw.hpp"
#include "dispz/validate.hpp"
#include "test_helpers.hpp"

using namespace dispz;
using testutil::rel_err;
namespace c = dispz::constants;

TEST_CASE("already block-diagonal M1 is a fixed point") {
    Eigen::VectorXd wq(1), wr(1);
    wq << c::two_pi * 5e9;
    wr << c::two_pi * 7e9;
    Eigen::MatrixXd m1 = Eigen::Vector2d(wq(0) * wq(0), wr(0) * wr(0)).asDiagonal();
    for (SwOrder order : {SwOrder::Order2, SwOrder::NumericExact}) {
        auto r = schrieffer_wolff(m1, wq, wr, order);
        CHECK(r.s.cwiseAbs().maxCoeff() < 1e-12);
        CHECK((r.m1_tilde - m1).cwiseAbs().maxCoeff() < 1e-10 * m1.norm());
        CHECK(r.residual < 1e-12 * m1.norm());
    }
}

TEST_CASE("2x2 second-order entry") {
    const double w1 = c::two_pi * 5e9, wr0 = c::two_pi * 7e9;
    const double coupling = 0.02 * wr0 * wr0;
    Eigen::MatrixXd m1(2, 2);
    m1 << w1 * w1, coupling, coupling, wr0 * wr0;
    Eigen::VectorXd wq(1), wr(1);
    wq << w1;
    wr << wr0;
    auto r = schrieffer_wolff(m1, wq, wr, SwOrder::Order2);
    const double expect = w1 * w1 + coupling * coupling / (w1 * w1 - wr0 * wr0);
    CHECK(rel_err(r.m1_tilde(0, 0), expect) < 1e-12);
    // generator antisymmetry
    CHECK((r.s + r.s.transpose()).cwiseAbs().maxCoeff() < 1e-12 * r.s.norm());
}

TEST_CASE("degeneracy raises singular-denominator") {
    const double w = c::two_pi * 6e9;
    Eigen::MatrixXd m1 = Eigen::Vector2d(w * w, w * w).asDiagonal();
    Eigen::VectorXd wq(1), wr(1);
    wq << w;
    wr << w * (1.0 + 1e-9);
    CHECK_THROWS_AS(schrieffer_wolff(m1, wq, wr, SwOrder::Order2),
                    SingularDenominatorError);
}

TEST_CASE("order-2 J equals the impedance formula to machine precision") {
    Rng rng(101);
    RandomCircuitParams p;
    for (int t = 0; t < 20; ++t) {
        RandomCircuit rc = random_dispersive_circuit(rng, p);
        FrameMatrices f = build_frames(rc.realization, rc.qubits);
        auto r = schrieffer_wolff(f.m1, f.omega_j, f.omega_r, SwOrder::Order2);
        Eigen::MatrixXd j2 = j_from_blockdiag(r, rc.qubits);
        PoleResidueEvaluator ev(rc.realization.to_pole_residue());
        for (int i = 0; i < rc.realization.n_qubits; ++i)
            for (int jx = i + 1; jx < rc.realization.n_qubits; ++jx) {
                const double jf = exchange_coupling_J(ev, rc.qubits[i], rc.qubits[jx]);
                if (j2(i, jx) != 0.0) CHECK(rel_err(jf, j2(i, jx)) < 1e-10);
            }
    }
}

TEST_CASE("numeric-exact block diagonalization") {
    Rng rng(55);
    RandomCircuitParams p;
    RandomCircuit rc = random_dispersive_circuit(rng, p);
    FrameMatrices f = build_frames(rc.realization, rc.qubits);
    auto r = schrieffer_wolff(f.m1, f.omega_j, f.omega_r, SwOrder::NumericExact);
    const int n = rc.realization.n_qubits;
    const int tot = f.m1.rows();

    // off-block coupling eliminated
    CHECK(r.m1_tilde.topRightCorner(n, tot - n).norm() <= 1e-12 * f.m1.norm());
    // spectrum preserved (orthogonal similarity)
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ea(f.m1), eb(r.m1_tilde);
    for (int i = 0; i < tot; ++i)
        CHECK(rel_err(eb.eigenvalues()(i), ea.eigenvalues()(i)) < 1e-10);
    // least-action generator is genuinely skew-symmetric
    CHECK((r.s + r.s.transpose()).cwiseAbs().maxCoeff() <=
          1e-12 * std::max(1.0, r.s.cwiseAbs().maxCoeff()));
    // exp(S) reproduces the rotation: exp(-S) M1 exp(S) block diagonal was
    // already checked through the residual
    CHECK(r.residual <= 1e-12 * f.m1.norm());
}

TEST_CASE("order-2 residual scales as the third power of the coupling") {
    Rng rng(72);
    RandomCircuitParams p;
    p.min_qubits = p.max_qubits = 3;
    p.min_modes = p.max_modes = 4;
    RandomCircuit rc = random_dispersive_circuit(rng, p);

    std::vector<double> log_s, log_res;
    for (double s : {1.0, 0.5, 0.25, 0.125}) {
        CauerRealization scaled = rc.realization;
        for (auto& m : scaled.modes) {
            m.r *= s;
            m.v *= s;
        }
        FrameMatrices f = build_frames(scaled, rc.qubits);
        auto r = schrieffer_wolff(f.m1, f.omega_j, f.omega_r, SwOrder::Order2);
        log_s.push_back(std::log(s));
        log_res.push_back(std::log(r.residual));
    }
    // slope of log(residual) vs log(s)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < log_s.size(); ++i) {
        sx += log_s[i];
        sy += log_res[i];
        sxx += log_s[i] * log_s[i];
        sxy += log_s[i] * log_res[i];
    }
    const double n = static_cast<double>(log_s.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope == doctest::Approx(3.0).epsilon(0.2 / 3.0));
}

TEST_CASE("drive projection D: zero drive and single-mode forms") {
    const double w1 = c::two_pi * 5e9, wr0 = c::two_pi * 7e9;
    const double c1 = 70e-15;
    const double rki = 2.0e6, vkd = 1.5e6;
    Eigen::MatrixXd m1(2, 2);
    m1 << w1 * w1, w1 * w1 * std::sqrt(c1) * rki, w1 * w1 * std::sqrt(c1) * rki,
        wr0 * wr0;
    Eigen::VectorXd wq(1), wr(1);
    wq << w1;
    wr << wr0;

    Eigen::MatrixXd v0 = Eigen::MatrixXd::Zero(1, 1);
    CHECK(drive_projection_D(m1, v0, wq, wr).cwiseAbs().maxCoeff() == 0.0);

    Eigen::MatrixXd v(1, 1);
    v << vkd;
    Eigen::MatrixXd d = drive_projection_D(m1, v, wq, wr);
    const double expect =
        -w1 * w1 * std::sqrt(c1) * rki * vkd / (w1 * w1 - wr0 * wr0);
    CHECK(rel_err(d(0, 0), expect) < 1e-12);
}

TEST_CASE("drive projection equals the impedance route on synthesized circuits") {
    Rng rng(88);
    RandomCircuitParams p;
    p.n_drives = 2;
    for (int t = 0; t < 10; ++t) {
        RandomCircuit rc = random_dispersive_circuit(rng, p);
        FrameMatrices f = build_frames(rc.realization, rc.qubits);
        Eigen::MatrixXd d = drive_projection_D(f.m1, rc.realization.v_matrix(),
                                               f.omega_j, f.omega_r);
        PoleResidueEvaluator ev(rc.realization.to_pole_residue());
        for (int i = 0; i < rc.realization.n_qubits; ++i)
            for (int dc = 0; dc < 2; ++dc) {
                const double via_z =
                    ev.im_z(i, rc.realization.n_qubits + dc, rc.qubits[i].omega) /
                    std::sqrt(rc.qubits[i].l);
                if (via_z != 0.0) CHECK(rel_err(d(i, dc), via_z) < 1e-10);
            }
    }
}

TEST_CASE("exact normal modes: degenerate uncoupled qubits") {
    LinearNetwork net;
    net.add_capacitor("a", "gnd", 65e-15);
    net.add_capacitor("b", "gnd", 65e-15);
    net.add_junction("q1", "a", "gnd", 10e-9);
    net.add_junction("q2", "b", "gnd", 10e-9);
    QubitMode q = solve_qubit_mode(10e-9, 65e-15);
    ExactModes em = exact_normal_modes(net, {q.l, q.l});
    REQUIRE(em.omegas.size() == 2);
    CHECK(rel_err(em.omegas[0], em.omegas[1]) < 1e-12);
    CHECK(rel_err(em.omegas[0], q.omega) < 1e-12);
}

TEST_CASE("exact normal modes: Lamb-type pull of a single qubit") {
    const double cq = 65e-15, cc = 1e-15, cr = 800e-15;
    const double lr = testutil::lr_for(7.5e9, cr);
    LinearNetwork net;
    net.add_capacitor("q", "gnd", cq);
    net.add_capacitor("q", "r", cc);
    net.add_capacitor("r", "gnd", cr);
    net.add_inductor("r", "gnd", lr);
    net.add_junction("q1", "q", "gnd", 10e-9);

    // frames of the open network give the coupling entry
    ModalDecomposition md = extract_modes(net);
    CauerRealization cz = synthesize(md.to_pole_residue(), 1, 0);
    QubitMode q = solve_qubit_mode(10e-9, cz.c0(0));
    q.index = 0;
    FrameMatrices f = build_frames(cz, {q});
    const double coupling = f.m1(0, 1);
    const double wr2 = f.m1(1, 1);

    ExactModes em = exact_normal_modes(net, {q.l});
    REQUIRE(em.omegas.size() == 2);
    // qubit-like mode: closest to q.omega
    const double w_meas = std::abs(em.omegas[0] - q.omega) <
                                  std::abs(em.omegas[1] - q.omega)
                              ? em.omegas[0]
                              : em.omegas[1];
    const double lam_pred = q.omega * q.omega +
                            coupling * coupling / (q.omega * q.omega - wr2);
    CHECK(rel_err(w_meas, std::sqrt(lam_pred)) < 1e-6);
}

TEST_CASE("M1 dimension and symmetry validation") {
    Eigen::MatrixXd m1 = Eigen::MatrixXd::Zero(3, 3);
    Eigen::VectorXd wq(1), wr(1);
    wq << 1.0;
    wr << 2.0;
    CHECK_THROWS_AS(schrieffer_wolff(m1, wq, wr, SwOrder::Order2),
                    InvalidInputError);
    Eigen::MatrixXd bad(2, 2);
    bad << 1.0, 0.5, -0.5, 4.0;
    CHECK_THROWS_AS(schrieffer_wolff(bad, wq, wr, SwOrder::Order2),
                    InvalidInputError);
}

TEST_CASE("J is negative for qubits below the bus modes") {
    Rng rng(404);
    RandomCircuitParams p;
    p.min_qubits = p.max_qubits = 2;
    for (int t = 0; t < 10; ++t) {
        RandomCircuit rc = random_dispersive_circuit(rng, p);
        FrameMatrices f = build_frames(rc.realization, rc.qubits);
        auto exact =
            schrieffer_wolff(f.m1, f.omega_j, f.omega_r, SwOrder::NumericExact);
        Eigen::MatrixXd je = j_from_blockdiag(exact, rc.qubits);
        CHECK(je(0, 1) < 0.0);  // all modes above both qubits, all r_ki > 0
    }
}
