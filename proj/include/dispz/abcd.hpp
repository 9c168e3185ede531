#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace dispz {

/// Reciprocal two-port transmission (ABCD) matrix at a fixed frequency.
struct TwoPortABCD {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    double omega = 0.0;

    std::complex<double> a() const { return m(0, 0); }
    std::complex<double> b() const { return m(0, 1); }
    std::complex<double> c() const { return m(1, 0); }
    std::complex<double> d() const { return m(1, 1); }
};

/// Ladder element descriptors for a cascade.
struct AbcdElement {
    enum class Kind { SeriesC, SeriesL, ShuntC, ShuntL, ShuntParallelLC } kind;
    double value1 = 0.0;  // C (farad) or L (henry)
    double value2 = 0.0;  // L for ShuntParallelLC
};

/// Product of element ABCD matrices in cascade order.
TwoPortABCD abcd_cascade(const std::vector<AbcdElement>& elements, double omega);

/// Standard reciprocal two-port conversion to the impedance matrix.
/// Throws when the C entry vanishes (ill-defined open-circuit parameters).
Eigen::Matrix2cd abcd_to_z(const TwoPortABCD& t);

}  // namespace dispz
