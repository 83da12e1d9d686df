#ifndef QDKERR_MODEL_HPP
#define QDKERR_MODEL_HPP

#include <cstdint>

#include "qdkerr/qed.hpp"

namespace qdkerr {

// Quasi-static Gaussian spectral wander of the transition about its mean.
// Each shot sees one fixed offset applied rigidly to both Zeeman branches.
struct JitterSpec {
    double sigma = 0.0;             // standard deviation of the wander [ueV]
    int quadrature_order = 512;     // Gauss-Hermite order for the ensemble integral
    long long mc_samples = 100000;  // Monte-Carlo sample count
    std::uint64_t seed = 0;

    void validate() const;
};

// Thermal occupation of the resident electron spin.
struct SpinEnsemble {
    double p_up = 0.5;

    double p_down() const { return 1.0 - p_up; }
    void validate() const;
};

struct Model {
    CavitySpec cavity;
    DipoleSpec dipole;
    JitterSpec jitter;
    SpinEnsemble spins;

    void validate() const;
};

} // namespace qdkerr

#endif
