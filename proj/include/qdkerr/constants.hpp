#ifndef QDKERR_CONSTANTS_HPP
#define QDKERR_CONSTANTS_HPP

namespace qdkerr {

// Reduced Planck constant in the unit system used throughout this library:
// energies in micro-electronvolts (ueV), times in nanoseconds (ns).
// All linewidths, couplings and rates at library interfaces are energy FWHMs
// in ueV; any half-width factors are internal to the formulas that need them.
inline constexpr double hbar_uev_ns = 0.6582119;

// FWHM of a unit-sigma Gaussian: 2*sqrt(2*ln 2).
inline constexpr double gaussian_fwhm_per_sigma = 2.3548200450309493;

inline constexpr const char* version = "0.1.0";

} // namespace qdkerr

#endif
