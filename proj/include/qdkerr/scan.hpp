#ifndef QDKERR_SCAN_HPP
#define QDKERR_SCAN_HPP

#include <vector>

#include "qdkerr/ensemble.hpp"

namespace qdkerr {

// Uniform frequency grid in absolute energies [ueV].
struct ScanGrid {
    double start = 0.0;
    double stop = 0.0;
    int points = 0;

    double at(int i) const {
        return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    void validate() const;
};

struct PhasePoint {
    double omega = 0.0;
    PhaseResult phase;
    bool estimator_ok = true;  // false where h*v vanished (phi reported as 0)
};

struct LineshapePoint {
    double omega = 0.0;
    double intensity = 0.0;  // cross-polarized (H) detected fraction of a V input
};

// Grid points are independent; the parallel kernels split them across OpenMP
// threads and produce bit-identical results to the serial references, which
// are kept for testing and benchmarking.
std::vector<PhasePoint> phase_scan(const ScanGrid& grid, const Model& model);
std::vector<PhasePoint> phase_scan_serial(const ScanGrid& grid, const Model& model);

std::vector<LineshapePoint> rs_lineshape(const ScanGrid& grid, const Model& model);
std::vector<LineshapePoint> rs_lineshape_serial(const ScanGrid& grid, const Model& model);

std::vector<PolarizationCounts> counts_scan(const ScanGrid& grid, const Model& model);
std::vector<PolarizationCounts> counts_scan_serial(const ScanGrid& grid, const Model& model);

// Monte-Carlo variants; point i uses substream i of the configured seed.
std::vector<PolarizationCounts> counts_scan_mc(const ScanGrid& grid, const Model& model);
std::vector<PolarizationCounts> counts_scan_mc_serial(const ScanGrid& grid, const Model& model);

// Phase estimate for already-averaged counts; maps the degenerate 0/0 case
// (no scattered H component at all, e.g. g = 0) to phi = 0 with
// estimator_ok = false instead of throwing.
PhasePoint phase_point_from_counts(double omega, const PolarizationCounts& c);

// Outermost half-maximum width of a sampled lineshape, by linear
// interpolation between grid points. Returns 0 for an all-zero curve.
double envelope_fwhm(const std::vector<LineshapePoint>& curve);

} // namespace qdkerr

#endif
