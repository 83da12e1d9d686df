#include "qdkerr/voigt.hpp"

#include <cmath>
#include <numbers>

#include "qdkerr/constants.hpp"

namespace qdkerr {

namespace {

double lorentzian(double x, double hwhm) {
    return hwhm / (std::numbers::pi * (x * x + hwhm * hwhm));
}

double gaussian(double x, double sigma) {
    return std::exp(-0.5 * x * x / (sigma * sigma)) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

template <typename F>
double simpson(F&& f, double a, double m, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double fa, double fm, double fb,
                        double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, lm, m, fa, flm, fm);
    const double right = simpson(f, m, rm, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

template <typename F>
double integrate(F&& f, double a, double b, double eps) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return adaptive_simpson(f, a, b, fa, fm, fb, simpson(f, a, m, b, fa, fm, fb), eps, 48);
}

} // namespace

double voigt_profile(double x, double lorentz_fwhm, double gauss_sigma) {
    if (lorentz_fwhm < 0.0 || gauss_sigma < 0.0)
        throw std::domain_error("voigt_profile: widths must be >= 0");
    if (gauss_sigma == 0.0) {
        if (lorentz_fwhm == 0.0) throw std::domain_error("voigt_profile: both widths are zero");
        return lorentzian(x, lorentz_fwhm / 2.0);
    }
    if (lorentz_fwhm == 0.0) return gaussian(x, gauss_sigma);

    const double hwhm = lorentz_fwhm / 2.0;
    const double c = 10.0 * gauss_sigma;
    auto f = [&](double t) { return lorentzian(x - t, hwhm) * gaussian(t, gauss_sigma); };
    // Split at the Lorentzian center when it falls inside the Gaussian window.
    if (x > -c && x < c)
        return integrate(f, -c, x, 1e-14) + integrate(f, x, c, 1e-14);
    return integrate(f, -c, c, 1e-14);
}

double voigt_fwhm(double lorentz_fwhm, double gauss_sigma) {
    if (gauss_sigma == 0.0) return lorentz_fwhm;
    if (lorentz_fwhm == 0.0) return gaussian_fwhm_per_sigma * gauss_sigma;

    const double peak = voigt_profile(0.0, lorentz_fwhm, gauss_sigma);
    const double half = peak / 2.0;

    double hi = lorentz_fwhm / 2.0 + gaussian_fwhm_per_sigma * gauss_sigma;
    while (voigt_profile(hi, lorentz_fwhm, gauss_sigma) > half) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 80 && (hi - lo) > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (voigt_profile(mid, lorentz_fwhm, gauss_sigma) > half)
            lo = mid;
        else
            hi = mid;
    }
    return lo + hi;  // 2 * half-width
}

double calibrate_jitter(double lorentz_fwhm, double target_fwhm) {
    if (lorentz_fwhm < 0.0 || !(target_fwhm > 0.0))
        throw std::domain_error("calibrate_jitter: widths must be positive");
    if (target_fwhm < lorentz_fwhm)
        throw InfeasibleTarget("calibrate_jitter: target FWHM below the Lorentzian FWHM");
    if (target_fwhm == lorentz_fwhm) return 0.0;
    if (lorentz_fwhm == 0.0) return target_fwhm / gaussian_fwhm_per_sigma;

    // voigt_fwhm is strictly increasing in sigma; bracket and bisect.
    double lo = 0.0;
    double hi = target_fwhm / gaussian_fwhm_per_sigma;  // pure-Gaussian sigma bounds from above
    for (int it = 0; it < 70 && (hi - lo) > 1e-12 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (voigt_fwhm(lorentz_fwhm, mid) < target_fwhm)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace qdkerr
