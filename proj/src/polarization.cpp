#include "qdkerr/polarization.hpp"

#include <cmath>
#include <numbers>

namespace qdkerr {

namespace {
constexpr double clamp_tolerance = 1e-6;
}

JonesVector scatter_linear_v(Complex r_plus, Complex r_minus) {
    return JonesVector{
        Complex(0.0, 0.5) * (r_minus - r_plus),
        0.5 * (r_minus + r_plus),
    };
}

PolarizationCounts counts_from_jones(const JonesVector& j) {
    return PolarizationCounts{
        std::norm(j.a_h),
        std::norm(j.a_v),
        0.5 * std::norm(j.a_h + j.a_v),
        0.5 * std::norm(j.a_h - j.a_v),
    };
}

PhaseResult phase_from_counts(const PolarizationCounts& c) {
    if (c.h < 0.0 || c.v < 0.0 || c.d < 0.0 || c.a < 0.0)
        throw InconsistentCounts("phase_from_counts: negative count");
    if (c.h == 0.0 || c.v == 0.0)
        throw EstimatorUndefined("phase_from_counts: h or v count is zero");

    const double ratio = (c.d - c.a) / (2.0 * std::sqrt(c.h * c.v));
    PhaseResult out;
    if (std::abs(ratio) <= 1.0) {
        out.phi = std::asin(ratio);
    } else if (std::abs(ratio) <= 1.0 + clamp_tolerance) {
        out.phi = std::copysign(std::numbers::pi / 2.0, ratio);
        out.saturated = true;
    } else {
        throw InconsistentCounts("phase_from_counts: |d-a| exceeds 2*sqrt(h*v)");
    }
    out.phi_r = out.phi / 2.0;
    return out;
}

double rotation_angle(const PolarizationCounts& c) {
    const double s1 = c.h - c.v;
    const double s2 = c.d - c.a;
    if (s1 == 0.0 && s2 == 0.0)
        throw UndefinedOrientation("rotation_angle: linearly unpolarized counts");
    double psi = 0.5 * std::atan2(s2, s1);
    if (psi < 0.0) psi += std::numbers::pi;
    return psi;
}

} // namespace qdkerr
