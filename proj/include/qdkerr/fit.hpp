#ifndef QDKERR_FIT_HPP
#define QDKERR_FIT_HPP

#include <functional>
#include <string>
#include <vector>

#include "qdkerr/model.hpp"

namespace qdkerr {

struct TableRangeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PhaseSample {
    double omega = 0.0;   // absolute [ueV]
    double phi = 0.0;     // [rad]
    double weight = 1.0;  // >= 0
};

struct PhaseDataset {
    std::vector<PhaseSample> rows;
    // Requires strictly increasing frequencies and at least 4 + n_params rows.
    void validate(int n_params = 1) const;
};

struct LifetimePoint {
    double omega = 0.0;       // absolute [ueV]
    double inverse_t1 = 0.0;  // [1/ns]
};

struct LifetimeDataset {
    std::vector<LifetimePoint> rows;
    void validate() const;
};

// Tabulated gamma(omega)/gamma_hom curve (externally supplied). Linear
// interpolation inside the tabulated range, TableRangeError outside.
struct GammaRatioTable {
    std::vector<double> omega;  // strictly increasing, absolute [ueV]
    std::vector<double> ratio;

    double at(double omega_query) const;
    bool covers(double omega_query) const;
    void validate() const;
};

struct FitResult {
    struct Param {
        std::string name;
        double value = 0.0;
        double sigma = 0.0;  // 1-sigma from the chi^2 curvature, scaled by reduced chi^2
    };
    std::vector<Param> params;
    double beta = 0.0;
    double beta_sigma = 0.0;
    double chi2 = 0.0;
    double residual_rms = 0.0;
    double gradient_inf_norm = 0.0;
    int iterations = 0;
    bool converged = false;
    bool at_boundary = false;
    std::vector<double> objective_trace;  // chi^2 after each accepted step

    const Param* find(const std::string& name) const;
};

struct CouplingFitOptions {
    double gamma_t = 0.0;          // fixed total radiative linewidth Gamma + gamma [ueV]
    double initial_coupling = 0.0; // Gamma(omega_x) start value; 0 -> gamma_t/2
    bool fit_delta_z = false;      // free the Zeeman splitting jointly
    double delta_z_lo = 1.0;
    double delta_z_hi = 6.0;
    bool parameterize_by_g = false; // optimize in g instead of Gamma(omega_x)
    int max_iterations = 200;
};

// One- (or two-) parameter damped least-squares fit of the phase-vs-frequency
// model to data. The free coupling is constrained to (0, gamma_t] through a
// logistic transform; gamma is tied as gamma_t - Gamma(omega_x). Returns
// best-so-far with converged=false when the iteration budget is exhausted.
FitResult fit_coupling(const PhaseDataset& data, const Model& fixed,
                       const CouplingFitOptions& options);

// Single-scale fit of 1/T1(omega) = Gamma(omega)/hbar + ratio(omega)/T1hom.
FitResult fit_lifetime_scale(const LifetimeDataset& data, const Model& model,
                             const GammaRatioTable& table, int max_iterations = 200);

// Weighted residual vector sqrt(w_i) * (phi_data_i - phi_model_i), exposed
// for diagnostics; both fitters minimize the sum of its squares.
std::vector<double> phase_residuals(const PhaseDataset& data, const Model& model);

// Central-difference Jacobian of a residual function, one column per
// parameter. Shared by the optimizer and the gradient self-checks.
std::vector<std::vector<double>> numeric_jacobian(
    const std::function<std::vector<double>(const std::vector<double>&)>& fn,
    const std::vector<double>& x, double step);

} // namespace qdkerr

#endif
