#ifndef QDKERR_POLARIZATION_HPP
#define QDKERR_POLARIZATION_HPP

#include <stdexcept>

#include "qdkerr/qed.hpp"

namespace qdkerr {

// Field amplitudes in the H/V linear basis. The circular basis convention is
// fixed to |sigma+-> = (|H> +- i|V>)/sqrt(2); every sign-sensitive output
// (sign of phi, rotation direction) follows from it.
struct JonesVector {
    Complex a_h{};
    Complex a_v{};
    double norm_sq() const { return std::norm(a_h) + std::norm(a_v); }
};

// Time-averaged detected intensities in the four linear analyzer bases.
// For any ensemble of states h+v == d+a holds identically.
struct PolarizationCounts {
    double h = 0.0;
    double v = 0.0;
    double d = 0.0;
    double a = 0.0;
};

struct PhaseResult {
    double phi = 0.0;        // [rad], arcsine principal branch [-pi/2, pi/2]
    double phi_r = 0.0;      // Kerr rotation, phi/2 exactly
    bool saturated = false;  // |ratio| was clamped to 1
};

struct EstimatorUndefined : std::domain_error {
    using std::domain_error::domain_error;
};
struct InconsistentCounts : std::domain_error {
    using std::domain_error::domain_error;
};
struct UndefinedOrientation : std::domain_error {
    using std::domain_error::domain_error;
};

// Scatter a unit |V> off the spin-selective circular channels: each circular
// component picks up its reflection amplitude. In the fixed basis convention
//   a_h = i(r_minus - r_plus)/2,   a_v = (r_minus + r_plus)/2.
JonesVector scatter_linear_v(Complex r_plus, Complex r_minus);

// h=|a_h|^2, v=|a_v|^2, d=|a_h+a_v|^2/2, a=|a_h-a_v|^2/2.
PolarizationCounts counts_from_jones(const JonesVector& j);

// Phase estimator sin(phi) = (d - a) / (2 sqrt(h v)). Values with
// 1 < |ratio| <= 1 + 1e-6 are clamped to +-pi/2 and flagged saturated;
// anything beyond that tolerance is inconsistent count data. Throws
// EstimatorUndefined when h or v vanishes.
PhaseResult phase_from_counts(const PolarizationCounts& c);

// Major-axis orientation of the linear polarization relative to H, folded to
// [0, pi): psi = atan2(d - a, h - v) / 2. Throws UndefinedOrientation when
// both differences vanish.
double rotation_angle(const PolarizationCounts& c);

} // namespace qdkerr

#endif
