#ifndef QDKERR_QED_HPP
#define QDKERR_QED_HPP

#include <complex>

namespace qdkerr {

using Complex = std::complex<double>;

// Single-mode cavity. kappa is the total energy decay FWHM; eta_top is the
// fraction of that decay that leaves through the addressed (top) mirror.
struct CavitySpec {
    double omega_c = 0.0;  // mode resonance [ueV]
    double kappa = 0.0;    // total energy FWHM [ueV]
    double eta_top = 0.9;  // in [0,1]

    double q_factor() const { return omega_c / kappa; }
    void validate() const;  // throws std::invalid_argument
};

// Charged-QD transition doublet. omega_x is the midpoint of the Zeeman
// doublet; the sigma- / sigma+ branches sit at omega_x -/+ zeeman_sign*delta_z/2.
// zeeman_sign flips which circular branch is lower in energy (the g-factor
// sign is not known a priori).
struct DipoleSpec {
    double omega_x = 0.0;     // mean transition energy [ueV]
    double delta_z = 0.0;     // Zeeman splitting [ueV], >= 0
    double g = 0.0;           // dipole-cavity coupling [ueV]
    double gamma = 0.0;       // radiative decay into non-cavity modes, FWHM [ueV]
    double gamma_star = 0.0;  // pure dephasing rate [ueV]
    int zeeman_sign = +1;     // +1 or -1

    double sigma_minus_energy() const { return omega_x - zeeman_sign * delta_z / 2.0; }
    double sigma_plus_energy() const { return omega_x + zeeman_sign * delta_z / 2.0; }
    void validate() const;
};

// Field reflection coefficient of the bare cavity:
//   r0(w) = 1 - eta_top*kappa / (i(w_c - w) + kappa/2)
// On resonance with eta_top = 1 this is -1 (perfect one-sided cavity).
Complex cold_reflection(double omega, const CavitySpec& cavity);

// Reflection with one circular transition at branch_energy coupled to the mode:
//   r(w) = 1 - eta_top*kappa*(i(w_t - w) + g_perp) /
//              [(i(w_t - w) + g_perp)(i(w_c - w) + kappa/2) + g^2]
// with g_perp = gamma/2 + gamma_star. Reduces to cold_reflection for g = 0.
Complex coupled_reflection(double omega, const CavitySpec& cavity,
                           double branch_energy, const DipoleSpec& dipole);

// Cavity-mediated emission rate at emitter frequency omega:
//   Gamma(w) = 4 g^2 / (kappa * (1 + (2(w_c - w)/kappa)^2))
double purcell_rate(double omega, const CavitySpec& cavity, double g);

// Inverse of purcell_rate in g: the coupling that yields the given rate at
// frequency omega.
double g_for_purcell_rate(double rate, double omega, const CavitySpec& cavity);

// beta = Gamma / (Gamma + gamma + gamma_star). Throws std::domain_error when
// all rates are zero.
double beta_factor(double coherent_rate, double gamma, double gamma_star);

// Fourier-limited linewidth <-> radiative lifetime, Gamma_t = hbar/T1.
double linewidth_from_lifetime(double t1_ns);
double lifetime_from_linewidth(double fwhm_uev);

// Fraction of 4*pi steradians escaping the pillar sidewall below the critical
// angle theta_c = asin(1/n). Two documented geometric models:
//  - equatorial_band: every direction within theta_c of the equatorial plane
//    escapes (exact for an on-axis emitter in an infinite cylinder); the
//    fraction is sin(theta_c).
//  - double_cone_product: additionally requires the azimuth to lie within
//    theta_c of the local outward normal, treating the two constraints as
//    independent; the fraction is sin(theta_c) * (2*theta_c/pi).
// Neither model reproduces the 0.12 sometimes quoted for GaAs pillars; the
// construction behind that number is not published.
enum class SideLossGeometry { equatorial_band, double_cone_product };
double solid_angle_fraction(double n_index, SideLossGeometry geometry);

} // namespace qdkerr

#endif
