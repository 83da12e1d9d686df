#include "qdkerr/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qdkerr/constants.hpp"
#include "qdkerr/ensemble.hpp"
#include "qdkerr/scan.hpp"

namespace qdkerr {

void PhaseDataset::validate(int n_params) const {
    const std::size_t min_rows = static_cast<std::size_t>(4 + n_params);
    if (rows.size() < std::max<std::size_t>(min_rows, 5))
        throw std::invalid_argument("phase dataset: too few rows for the fit");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].weight < 0.0) throw std::invalid_argument("phase dataset: negative weight");
        if (i > 0 && !(rows[i].omega > rows[i - 1].omega))
            throw std::invalid_argument("phase dataset: frequencies must be strictly increasing");
    }
}

void LifetimeDataset::validate() const {
    if (rows.size() < 2) throw std::invalid_argument("lifetime dataset: too few rows");
    for (const auto& r : rows)
        if (!(r.inverse_t1 > 0.0)) throw std::invalid_argument("lifetime dataset: inverse_T1 must be > 0");
}

void GammaRatioTable::validate() const {
    if (omega.size() != ratio.size() || omega.size() < 2)
        throw std::invalid_argument("gamma ratio table: need >= 2 matching rows");
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (i > 0 && !(omega[i] > omega[i - 1]))
            throw std::invalid_argument("gamma ratio table: frequencies must be strictly increasing");
        if (!(ratio[i] > 0.0)) throw std::invalid_argument("gamma ratio table: ratio must be > 0");
    }
}

bool GammaRatioTable::covers(double w) const {
    return !omega.empty() && w >= omega.front() && w <= omega.back();
}

double GammaRatioTable::at(double w) const {
    if (!covers(w)) throw TableRangeError("gamma ratio table: frequency outside tabulated range");
    const auto it = std::upper_bound(omega.begin(), omega.end(), w);
    if (it == omega.begin()) return ratio.front();
    if (it == omega.end()) return ratio.back();
    const std::size_t j = static_cast<std::size_t>(it - omega.begin());
    const double t = (w - omega[j - 1]) / (omega[j] - omega[j - 1]);
    return ratio[j - 1] + t * (ratio[j] - ratio[j - 1]);
}

const FitResult::Param* FitResult::find(const std::string& name) const {
    for (const auto& p : params)
        if (p.name == name) return &p;
    return nullptr;
}

std::vector<std::vector<double>> numeric_jacobian(
    const std::function<std::vector<double>(const std::vector<double>&)>& fn,
    const std::vector<double>& x, double step) {
    std::vector<std::vector<double>> cols(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        std::vector<double> xp = x, xm = x;
        const double h = step * std::max(1.0, std::abs(x[j]));
        xp[j] += h;
        xm[j] -= h;
        const auto rp = fn(xp);
        const auto rm = fn(xm);
        cols[j].resize(rp.size());
        for (std::size_t i = 0; i < rp.size(); ++i) cols[j][i] = (rp[i] - rm[i]) / (2.0 * h);
    }
    return cols;
}

namespace {

double sum_sq(const std::vector<double>& r) {
    double s = 0.0;
    for (double v : r) s += v * v;
    return s;
}

struct LmOutcome {
    std::vector<double> x;
    double chi2 = 0.0;
    double gradient_inf = 0.0;
    int iterations = 0;
    bool converged = false;
    std::vector<double> trace;
    double jtj[2][2] = {{0, 0}, {0, 0}};  // at the final point, unscaled
    int n_residuals = 0;
};

// Damped least squares (Levenberg-Marquardt) for 1 or 2 parameters with a
// central-difference Jacobian. Accepted steps strictly decrease chi^2.
LmOutcome levenberg_marquardt(
    const std::function<std::vector<double>(const std::vector<double>&)>& fn,
    std::vector<double> x, int max_iterations) {
    constexpr double gtol = 1e-9;
    constexpr double step_tol = 1e-12;
    constexpr double fd_step = 1e-5;
    const int p = static_cast<int>(x.size());

    LmOutcome out;
    std::vector<double> r = fn(x);
    double chi2 = sum_sq(r);
    out.trace.push_back(chi2);
    out.n_residuals = static_cast<int>(r.size());

    double lambda = 1e-3;
    for (int iter = 0; iter < max_iterations; ++iter) {
        out.iterations = iter + 1;
        const auto J = numeric_jacobian(fn, x, fd_step);

        double jtj[2][2] = {{0, 0}, {0, 0}};
        double g[2] = {0, 0};
        for (int a = 0; a < p; ++a) {
            for (int b = 0; b <= a; ++b) {
                double s = 0.0;
                for (std::size_t i = 0; i < r.size(); ++i) s += J[a][i] * J[b][i];
                jtj[a][b] = jtj[b][a] = s;
            }
            double s = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i) s += J[a][i] * r[i];
            g[a] = s;
        }
        out.gradient_inf = std::abs(g[0]);
        if (p == 2) out.gradient_inf = std::max(out.gradient_inf, std::abs(g[1]));
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) out.jtj[a][b] = jtj[a][b];

        if (out.gradient_inf <= gtol) {
            out.converged = true;
            break;
        }

        bool accepted = false;
        bool stationary = false;
        for (int attempt = 0; attempt < 40 && !accepted; ++attempt) {
            double step[2] = {0, 0};
            if (p == 1) {
                const double a00 = jtj[0][0] * (1.0 + lambda);
                if (a00 <= 0.0) break;
                step[0] = -g[0] / a00;
            } else {
                const double a00 = jtj[0][0] * (1.0 + lambda);
                const double a11 = jtj[1][1] * (1.0 + lambda);
                const double a01 = jtj[0][1];
                const double det = a00 * a11 - a01 * a01;
                if (det <= 0.0) {
                    lambda *= 8.0;
                    continue;
                }
                step[0] = (-g[0] * a11 + g[1] * a01) / det;
                step[1] = (g[0] * a01 - g[1] * a00) / det;
            }

            std::vector<double> xt = x;
            double step_norm = 0.0;
            for (int a = 0; a < p; ++a) {
                xt[a] += step[a];
                step_norm = std::max(step_norm, std::abs(step[a]) / std::max(1.0, std::abs(x[a])));
            }
            const auto rt = fn(xt);
            const double chi2_t = sum_sq(rt);
            if (chi2_t < chi2) {
                x = xt;
                r = rt;
                chi2 = chi2_t;
                out.trace.push_back(chi2);
                lambda = std::max(lambda / 4.0, 1e-12);
                accepted = true;
                stationary = step_norm <= step_tol;
            } else {
                lambda *= 8.0;
                if (lambda > 1e14) break;
            }
        }
        if (!accepted || stationary) break;
    }

    // Final gradient check for the convergence contract.
    {
        const auto J = numeric_jacobian(fn, x, fd_step);
        double ginf = 0.0;
        for (int a = 0; a < p; ++a) {
            double s = 0.0;
            for (std::size_t i = 0; i < r.size(); ++i) s += J[a][i] * r[i];
            ginf = std::max(ginf, std::abs(s));
            for (int b = 0; b < p; ++b) {
                double jj = 0.0;
                for (std::size_t i = 0; i < r.size(); ++i) jj += J[a][i] * J[b][i];
                out.jtj[a][b] = jj;
            }
        }
        out.gradient_inf = ginf;
        if (ginf <= gtol) out.converged = true;
    }

    out.x = x;
    out.chi2 = chi2;
    return out;
}

// chi^2-curvature covariance, scaled by the reduced chi^2.
void covariance_2x2(const double jtj[2][2], int p, double chi2, int n, double cov[2][2]) {
    const int dof = std::max(1, n - p);
    const double s2 = std::max(chi2 / dof, 1e-300);
    if (p == 1) {
        cov[0][0] = jtj[0][0] > 0.0 ? s2 / jtj[0][0] : 0.0;
        return;
    }
    const double det = jtj[0][0] * jtj[1][1] - jtj[0][1] * jtj[1][0];
    if (det <= 0.0) {
        cov[0][0] = cov[1][1] = 0.0;
        return;
    }
    cov[0][0] = s2 * jtj[1][1] / det;
    cov[1][1] = s2 * jtj[0][0] / det;
    cov[0][1] = cov[1][0] = -s2 * jtj[0][1] / det;
}

double logistic(double u) { return 1.0 / (1.0 + std::exp(-u)); }
double logit(double y) { return std::log(y / (1.0 - y)); }

} // namespace

std::vector<double> phase_residuals(const PhaseDataset& data, const Model& model) {
    std::vector<double> r(data.rows.size());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < static_cast<int>(data.rows.size()); ++i) {
        const auto& row = data.rows[i];
        const PhasePoint p = phase_point_from_counts(row.omega, averaged_counts(row.omega, model));
        r[i] = std::sqrt(row.weight) * (row.phi - p.phase.phi);
    }
    return r;
}

FitResult fit_coupling(const PhaseDataset& data, const Model& fixed,
                       const CouplingFitOptions& options) {
    const int n_params = options.fit_delta_z ? 2 : 1;
    data.validate(n_params);
    fixed.validate();
    if (!(options.gamma_t > 0.0)) throw std::invalid_argument("fit_coupling: gamma_t must be > 0");
    if (options.fit_delta_z && !(options.delta_z_hi > options.delta_z_lo))
        throw std::invalid_argument("fit_coupling: bad delta_z bounds");

    const double gamma_t = options.gamma_t;
    const double omega_x = fixed.dipole.omega_x;
    const double g_max = g_for_purcell_rate(gamma_t, omega_x, fixed.cavity);
    const double dz_mid = 0.5 * (options.delta_z_lo + options.delta_z_hi);
    const double dz_half = 0.5 * (options.delta_z_hi - options.delta_z_lo);

    // u0 -> coupling through a logistic transform keeps Gamma in (0, gamma_t).
    auto coupling_of = [&](double u) {
        if (options.parameterize_by_g) {
            const double g = g_max * logistic(u);
            return purcell_rate(omega_x, fixed.cavity, g);
        }
        return gamma_t * logistic(u);
    };
    auto delta_z_of = [&](double u) { return dz_mid + dz_half * std::tanh(u); };

    auto model_for = [&](const std::vector<double>& u) {
        Model m = fixed;
        const double coupling = coupling_of(u[0]);
        m.dipole.g = g_for_purcell_rate(coupling, omega_x, fixed.cavity);
        m.dipole.gamma = std::max(gamma_t - coupling, 0.0);
        if (options.fit_delta_z) m.dipole.delta_z = delta_z_of(u[1]);
        return m;
    };
    auto residual_fn = [&](const std::vector<double>& u) {
        return phase_residuals(data, model_for(u));
    };

    std::vector<double> u0(n_params, 0.0);
    const double start = options.initial_coupling > 0.0
                             ? std::clamp(options.initial_coupling / gamma_t, 1e-3, 1.0 - 1e-3)
                             : 0.5;
    u0[0] = logit(start);
    if (options.fit_delta_z) {
        const double dz0 = std::clamp(fixed.dipole.delta_z, options.delta_z_lo + 1e-6 * dz_half,
                                      options.delta_z_hi - 1e-6 * dz_half);
        u0[1] = std::atanh((dz0 - dz_mid) / dz_half);
    }

    const LmOutcome lm = levenberg_marquardt(residual_fn, u0, options.max_iterations);

    double cov[2][2] = {{0, 0}, {0, 0}};
    covariance_2x2(lm.jtj, n_params, lm.chi2, lm.n_residuals, cov);

    const double coupling = coupling_of(lm.x[0]);
    const double gamma = std::max(gamma_t - coupling, 0.0);
    // d(coupling)/du for the uncertainty transform
    double dcdu;
    if (options.parameterize_by_g) {
        const double s = logistic(lm.x[0]);
        const double g = g_max * s;
        const double dgdu = g_max * s * (1.0 - s);
        dcdu = 2.0 * purcell_rate(omega_x, fixed.cavity, g) / std::max(g, 1e-300) * dgdu;
    } else {
        const double s = logistic(lm.x[0]);
        dcdu = gamma_t * s * (1.0 - s);
    }
    const double coupling_sigma = std::abs(dcdu) * std::sqrt(std::max(cov[0][0], 0.0));

    FitResult out;
    out.params.push_back({"Gamma_uev", coupling, coupling_sigma});
    out.params.push_back({"gamma_uev", gamma, coupling_sigma});
    if (options.fit_delta_z) {
        const double t = std::tanh(lm.x[1]);
        const double ddzdu = dz_half * (1.0 - t * t);
        out.params.push_back(
            {"delta_z_uev", delta_z_of(lm.x[1]), std::abs(ddzdu) * std::sqrt(std::max(cov[1][1], 0.0))});
    }
    out.beta = beta_factor(coupling, gamma, fixed.dipole.gamma_star);
    out.beta_sigma = coupling_sigma / (gamma_t + fixed.dipole.gamma_star);
    out.chi2 = lm.chi2;
    out.residual_rms = std::sqrt(lm.chi2 / static_cast<double>(lm.n_residuals));
    out.gradient_inf_norm = lm.gradient_inf;
    out.iterations = lm.iterations;
    out.converged = lm.converged;
    out.at_boundary = std::abs(lm.x[0]) > 10.0;
    out.objective_trace = lm.trace;
    return out;
}

FitResult fit_lifetime_scale(const LifetimeDataset& data, const Model& model,
                             const GammaRatioTable& table, int max_iterations) {
    data.validate();
    model.validate();
    table.validate();
    for (const auto& row : data.rows)
        if (!table.covers(row.omega))
            throw TableRangeError("fit_lifetime_scale: data frequency outside gamma ratio table");

    auto residual_fn = [&](const std::vector<double>& u) {
        const double t1hom = std::exp(u[0]);
        std::vector<double> r(data.rows.size());
        for (std::size_t i = 0; i < data.rows.size(); ++i) {
            const auto& row = data.rows[i];
            const double rate = purcell_rate(row.omega, model.cavity, model.dipole.g) / hbar_uev_ns +
                                table.at(row.omega) / t1hom;
            r[i] = row.inverse_t1 - rate;
        }
        return r;
    };

    // Start from the mean inverse rate attributed entirely to the leaky channel.
    double mean_inv = 0.0;
    for (const auto& row : data.rows) mean_inv += row.inverse_t1;
    mean_inv /= static_cast<double>(data.rows.size());
    std::vector<double> u0 = {std::log(1.0 / mean_inv)};

    const LmOutcome lm = levenberg_marquardt(residual_fn, u0, max_iterations);

    double cov[2][2] = {{0, 0}, {0, 0}};
    covariance_2x2(lm.jtj, 1, lm.chi2, lm.n_residuals, cov);

    const double t1hom = std::exp(lm.x[0]);
    const double t1hom_sigma = t1hom * std::sqrt(std::max(cov[0][0], 0.0));
    const double gamma_hom = hbar_uev_ns / t1hom;

    FitResult out;
    out.params.push_back({"T1hom_ns", t1hom, t1hom_sigma});
    out.params.push_back({"gamma_hom_uev", gamma_hom, gamma_hom * t1hom_sigma / t1hom});
    const double omega_x = model.dipole.omega_x;
    if (table.covers(omega_x)) {
        const double coherent = purcell_rate(omega_x, model.cavity, model.dipole.g);
        const double leak = table.at(omega_x) * gamma_hom;
        if (coherent + leak > 0.0) out.beta = beta_factor(coherent, leak, model.dipole.gamma_star);
    }
    out.chi2 = lm.chi2;
    out.residual_rms = std::sqrt(lm.chi2 / static_cast<double>(lm.n_residuals));
    out.gradient_inf_norm = lm.gradient_inf;
    out.iterations = lm.iterations;
    out.converged = lm.converged;
    out.objective_trace = lm.trace;
    return out;
}

} // namespace qdkerr
