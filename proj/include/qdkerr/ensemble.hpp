#ifndef QDKERR_ENSEMBLE_HPP
#define QDKERR_ENSEMBLE_HPP

#include <cstdint>

#include "qdkerr/model.hpp"
#include "qdkerr/polarization.hpp"

namespace qdkerr {

// Counts for one shot: a fixed jitter offset and a definite spin state.
// Spin-down couples the sigma- branch and leaves sigma+ on the cold cavity;
// spin-up mirrors this. Both branch centers shift together by the offset.
PolarizationCounts single_shot_counts(double omega_laser, const CavitySpec& cavity,
                                      const DipoleSpec& dipole, double jitter_offset,
                                      bool spin_up);

// Thermal- and jitter-averaged counts: the spin mixture weighted by the
// occupation probabilities and the Gaussian wander integrated by
// Gauss-Hermite quadrature of the configured order.
PolarizationCounts averaged_counts(double omega_laser, const Model& model);

// Monte-Carlo estimate of averaged_counts, drawing offset ~ N(0, sigma) and
// spin ~ (p_up, p_down). Deterministic for a fixed (seed, stream) pair;
// scans assign stream = point index so that parallel and serial evaluation
// agree bit-for-bit.
struct McCounts {
    PolarizationCounts mean;
    PolarizationCounts standard_error;
    long long samples = 0;
};

McCounts averaged_counts_mc_stats(double omega_laser, const Model& model,
                                  std::uint64_t stream = 0);
PolarizationCounts averaged_counts_mc(double omega_laser, const Model& model,
                                      std::uint64_t stream = 0);

} // namespace qdkerr

#endif
