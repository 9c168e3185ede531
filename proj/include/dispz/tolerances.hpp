#pragma once

#include <string>

namespace dispz {

/// Numerical tolerances shared across the pipeline. Defaults reflect
/// double-precision eigen-solves; see the named profiles below.
struct Tolerances {
    double rank1_tol = 1e-8;          // relative second singular value of a residue
    double pole_merge_tol = 1e-6;     // relative frequency gap below which poles merge
    double pole_guard = 1e-9;         // relative guard radius around poles for Z(w)
    double symmetry_tol = 1e-12;      // relative |A - A^T| bound
    double zero_mode_tol = 1e-6;      // w below this fraction of w_max counts as DC
    double residue_drop_tol = 1e-12;  // relative residue norm below which a mode is port-decoupled
    double dispersive_error_ratio = 3.0;   // error if |w_i - w_Rk| < 3 g_ik
    double dispersive_warn_ratio = 10.0;   // warn if below 10 g_ik
    double coupling_warn = 0.3;       // warn when r_ki sqrt(C_i) exceeds this
    double transmon_r_warn = 0.2;     // warn when (E_C/hbar)/w_J exceeds this
    double bath_correction_limit = 0.01;   // validity bound for the simplified bath
    double crosstalk_floor_db = -200.0;
};

/// Named profiles selectable from the CLI (--tolerance-profile).
Tolerances tolerance_profile(const std::string& name);

}  // namespace dispz
