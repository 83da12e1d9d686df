#include "qdkerr/qed.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdkerr/constants.hpp"

namespace qdkerr {

void CavitySpec::validate() const {
    if (!std::isfinite(omega_c)) throw std::invalid_argument("cavity: omega_c must be finite");
    if (!(kappa > 0.0) || !std::isfinite(kappa)) throw std::invalid_argument("cavity: kappa must be > 0");
    if (!(eta_top >= 0.0 && eta_top <= 1.0)) throw std::invalid_argument("cavity: eta_top must be in [0,1]");
}

void DipoleSpec::validate() const {
    if (!std::isfinite(omega_x)) throw std::invalid_argument("dipole: omega_x must be finite");
    if (!(delta_z >= 0.0)) throw std::invalid_argument("dipole: delta_z must be >= 0");
    if (!(g >= 0.0)) throw std::invalid_argument("dipole: g must be >= 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("dipole: gamma must be >= 0");
    if (!(gamma_star >= 0.0)) throw std::invalid_argument("dipole: gamma_star must be >= 0");
    if (zeeman_sign != 1 && zeeman_sign != -1) throw std::invalid_argument("dipole: zeeman_sign must be +1 or -1");
}

Complex cold_reflection(double omega, const CavitySpec& cavity) {
    const Complex denom(cavity.kappa / 2.0, cavity.omega_c - omega);
    return 1.0 - cavity.eta_top * cavity.kappa / denom;
}

Complex coupled_reflection(double omega, const CavitySpec& cavity,
                           double branch_energy, const DipoleSpec& dipole) {
    const double gamma_perp = dipole.gamma / 2.0 + dipole.gamma_star;
    const Complex dt(gamma_perp, branch_energy - omega);
    const Complex dc(cavity.kappa / 2.0, cavity.omega_c - omega);
    return 1.0 - cavity.eta_top * cavity.kappa * dt / (dt * dc + dipole.g * dipole.g);
}

double purcell_rate(double omega, const CavitySpec& cavity, double g) {
    const double x = 2.0 * (cavity.omega_c - omega) / cavity.kappa;
    return 4.0 * g * g / (cavity.kappa * (1.0 + x * x));
}

double g_for_purcell_rate(double rate, double omega, const CavitySpec& cavity) {
    if (rate < 0.0) throw std::domain_error("g_for_purcell_rate: rate must be >= 0");
    const double x = 2.0 * (cavity.omega_c - omega) / cavity.kappa;
    return std::sqrt(rate * cavity.kappa * (1.0 + x * x) / 4.0);
}

double beta_factor(double coherent_rate, double gamma, double gamma_star) {
    if (coherent_rate < 0.0 || gamma < 0.0 || gamma_star < 0.0)
        throw std::domain_error("beta_factor: rates must be >= 0");
    const double total = coherent_rate + gamma + gamma_star;
    if (!(total > 0.0)) throw std::domain_error("beta_factor: all rates are zero");
    return coherent_rate / total;
}

double linewidth_from_lifetime(double t1_ns) {
    if (!(t1_ns > 0.0)) throw std::domain_error("linewidth_from_lifetime: lifetime must be > 0");
    return hbar_uev_ns / t1_ns;
}

double lifetime_from_linewidth(double fwhm_uev) {
    if (!(fwhm_uev > 0.0)) throw std::domain_error("lifetime_from_linewidth: linewidth must be > 0");
    return hbar_uev_ns / fwhm_uev;
}

double solid_angle_fraction(double n_index, SideLossGeometry geometry) {
    if (!(n_index >= 1.0)) throw std::domain_error("solid_angle_fraction: refractive index must be >= 1");
    const double sin_tc = 1.0 / n_index;
    const double theta_c = std::asin(sin_tc);
    switch (geometry) {
        case SideLossGeometry::equatorial_band:
            return sin_tc;
        case SideLossGeometry::double_cone_product:
            return sin_tc * (2.0 * theta_c / std::numbers::pi);
    }
    throw std::invalid_argument("solid_angle_fraction: unknown geometry");
}

} // namespace qdkerr
