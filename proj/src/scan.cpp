#include "qdkerr/scan.hpp"

#include <cmath>
#include <stdexcept>

namespace qdkerr {

void ScanGrid::validate() const {
    if (!(stop > start)) throw std::invalid_argument("scan: stop must be > start");
    if (points < 2) throw std::invalid_argument("scan: points must be >= 2");
}

PhasePoint phase_point_from_counts(double omega, const PolarizationCounts& c) {
    PhasePoint p;
    p.omega = omega;
    if (c.h <= 0.0 || c.v <= 0.0) {
        // |d-a| <= 2 sqrt(h v) for any ensemble, so h*v == 0 forces d == a:
        // the limit of the estimator is 0 but the point is flagged.
        p.phase = PhaseResult{};
        p.estimator_ok = false;
        return p;
    }
    p.phase = phase_from_counts(c);
    return p;
}

std::vector<PhasePoint> phase_scan(const ScanGrid& grid, const Model& model) {
    grid.validate();
    model.validate();
    std::vector<PhasePoint> out(grid.points);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid.points; ++i) {
        const double omega = grid.at(i);
        out[i] = phase_point_from_counts(omega, averaged_counts(omega, model));
    }
    return out;
}

std::vector<PhasePoint> phase_scan_serial(const ScanGrid& grid, const Model& model) {
    grid.validate();
    model.validate();
    std::vector<PhasePoint> out(grid.points);
    for (int i = 0; i < grid.points; ++i) {
        const double omega = grid.at(i);
        out[i] = phase_point_from_counts(omega, averaged_counts(omega, model));
    }
    return out;
}

std::vector<LineshapePoint> rs_lineshape(const ScanGrid& grid, const Model& model) {
    grid.validate();
    model.validate();
    std::vector<LineshapePoint> out(grid.points);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid.points; ++i) {
        const double omega = grid.at(i);
        out[i] = LineshapePoint{omega, averaged_counts(omega, model).h};
    }
    return out;
}

std::vector<LineshapePoint> rs_lineshape_serial(const ScanGrid& grid, const Model& model) {
    grid.validate();
    model.validate();
    std::vector<LineshapePoint> out(grid.points);
    for (int i = 0; i < grid.points; ++i) {
        const double omega = grid.at(i);
        out[i] = LineshapePoint{omega, averaged_counts(omega, model).h};
    }
    return out;
}

std::vector<PolarizationCounts> counts_scan(const ScanGrid& grid, const Model& model) {
    grid.validate();
    model.validate();
    std::vector<PolarizationCounts> out(grid.points);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < grid.points; ++i) out[i] = averaged_counts(grid.at(i), model);
    return out;
}

std::vector<PolarizationCounts> counts_scan_serial(const ScanGrid& grid, const Model& model) {
    grid.validate();
    model.validate();
    std::vector<PolarizationCounts> out(grid.points);
    for (int i = 0; i < grid.points; ++i) out[i] = averaged_counts(grid.at(i), model);
    return out;
}

std::vector<PolarizationCounts> counts_scan_mc(const ScanGrid& grid, const Model& model) {
    grid.validate();
    model.validate();
    std::vector<PolarizationCounts> out(grid.points);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < grid.points; ++i)
        out[i] = averaged_counts_mc(grid.at(i), model, static_cast<std::uint64_t>(i));
    return out;
}

std::vector<PolarizationCounts> counts_scan_mc_serial(const ScanGrid& grid, const Model& model) {
    grid.validate();
    model.validate();
    std::vector<PolarizationCounts> out(grid.points);
    for (int i = 0; i < grid.points; ++i)
        out[i] = averaged_counts_mc(grid.at(i), model, static_cast<std::uint64_t>(i));
    return out;
}

double envelope_fwhm(const std::vector<LineshapePoint>& curve) {
    if (curve.size() < 2) return 0.0;
    double peak = 0.0;
    for (const auto& p : curve) peak = std::max(peak, p.intensity);
    if (peak <= 0.0) return 0.0;
    const double half = peak / 2.0;

    auto crossing = [&](std::size_t i, std::size_t j) {
        // linear interpolation of the half-max crossing between samples i, j
        const double y0 = curve[i].intensity, y1 = curve[j].intensity;
        const double t = (half - y0) / (y1 - y0);
        return curve[i].omega + t * (curve[j].omega - curve[i].omega);
    };

    double left = curve.front().omega, right = curve.back().omega;
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        if (curve[i].intensity < half && curve[i + 1].intensity >= half) {
            left = crossing(i, i + 1);
            break;
        }
    }
    for (std::size_t i = curve.size() - 1; i > 0; --i) {
        if (curve[i].intensity < half && curve[i - 1].intensity >= half) {
            right = crossing(i, i - 1);
            break;
        }
    }
    return right - left;
}

} // namespace qdkerr
