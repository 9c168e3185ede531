#include "dispz/abcd.hpp"

#include <cmath>

#include "dispz/errors.hpp"

namespace dispz {

namespace {
using cd = std::complex<double>;
constexpr cd kJ{0.0, 1.0};

Eigen::Matrix2cd series(cd z) {
    Eigen::Matrix2cd m;
    m << 1.0, z, 0.0, 1.0;
    return m;
}

Eigen::Matrix2cd shunt(cd y) {
    Eigen::Matrix2cd m;
    m << 1.0, 0.0, y, 1.0;
    return m;
}
}  // namespace

TwoPortABCD abcd_cascade(const std::vector<AbcdElement>& elements, double omega) {
    if (elements.empty()) throw InvalidInputError("empty ABCD cascade");
    if (!(omega > 0.0)) throw InvalidInputError("ABCD cascade requires omega > 0");
    TwoPortABCD t;
    t.omega = omega;
    for (const auto& e : elements) {
        switch (e.kind) {
            case AbcdElement::Kind::SeriesC:
                t.m = t.m * series(1.0 / (kJ * omega * e.value1));
                break;
            case AbcdElement::Kind::SeriesL:
                t.m = t.m * series(kJ * omega * e.value1);
                break;
            case AbcdElement::Kind::ShuntC:
                t.m = t.m * shunt(kJ * omega * e.value1);
                break;
            case AbcdElement::Kind::ShuntL:
                t.m = t.m * shunt(1.0 / (kJ * omega * e.value1));
                break;
            case AbcdElement::Kind::ShuntParallelLC:
                t.m = t.m * shunt(kJ * omega * e.value1 + 1.0 / (kJ * omega * e.value2));
                break;
        }
    }
    return t;
}

Eigen::Matrix2cd abcd_to_z(const TwoPortABCD& t) {
    const cd c = t.c();
    if (std::abs(c) == 0.0)
        throw PhysicsError("ABCD to Z conversion ill-defined: C entry is zero "
                           "(open-circuit parameters do not exist)");
    Eigen::Matrix2cd z;
    z << t.a() / c, (t.a() * t.d() - t.b() * c) / c, 1.0 / c, t.d() / c;
    return z;
}

}  // namespace dispz
