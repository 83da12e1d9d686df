#ifndef QDKERR_VOIGT_HPP
#define QDKERR_VOIGT_HPP

#include <stdexcept>

namespace qdkerr {

struct InfeasibleTarget : std::domain_error {
    using std::domain_error::domain_error;
};

// Area-normalized Voigt profile at x: a Lorentzian of the given FWHM
// convolved with a Gaussian of standard deviation sigma, both centered at 0.
// Evaluated by adaptive numerical convolution, valid for any width ratio.
double voigt_profile(double x, double lorentz_fwhm, double gauss_sigma);

// FWHM of the profile above, measured numerically by bisection on the
// half-maximum crossing.
double voigt_fwhm(double lorentz_fwhm, double gauss_sigma);

// Gaussian sigma such that the convolved profile has the target FWHM.
// Pure root-finding on voigt_fwhm; throws InfeasibleTarget when
// target < lorentz_fwhm.
double calibrate_jitter(double lorentz_fwhm, double target_fwhm);

} // namespace qdkerr

#endif
