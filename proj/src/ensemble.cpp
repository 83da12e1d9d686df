#include "qdkerr/ensemble.hpp"

#include <cmath>

#include "qdkerr/gauss_hermite.hpp"
#include "qdkerr/rng.hpp"

namespace qdkerr {

void JitterSpec::validate() const {
    if (!(sigma >= 0.0)) throw std::invalid_argument("jitter: sigma must be >= 0");
    if (quadrature_order < 1) throw std::invalid_argument("jitter: quadrature_order must be >= 1");
    if (mc_samples < 1) throw std::invalid_argument("jitter: mc_samples must be >= 1");
}

void SpinEnsemble::validate() const {
    if (!(p_up >= 0.0 && p_up <= 1.0)) throw std::invalid_argument("spins: p_up must be in [0,1]");
}

void Model::validate() const {
    cavity.validate();
    dipole.validate();
    jitter.validate();
    spins.validate();
}

PolarizationCounts single_shot_counts(double omega_laser, const CavitySpec& cavity,
                                      const DipoleSpec& dipole, double jitter_offset,
                                      bool spin_up) {
    const Complex r_cold = cold_reflection(omega_laser, cavity);
    JonesVector out;
    if (spin_up) {
        const Complex r_plus = coupled_reflection(
            omega_laser, cavity, dipole.sigma_plus_energy() + jitter_offset, dipole);
        out = scatter_linear_v(r_plus, r_cold);
    } else {
        const Complex r_minus = coupled_reflection(
            omega_laser, cavity, dipole.sigma_minus_energy() + jitter_offset, dipole);
        out = scatter_linear_v(r_cold, r_minus);
    }
    return counts_from_jones(out);
}

namespace {

PolarizationCounts spin_mixture(double omega, const Model& m, double offset) {
    const PolarizationCounts down = single_shot_counts(omega, m.cavity, m.dipole, offset, false);
    const PolarizationCounts up = single_shot_counts(omega, m.cavity, m.dipole, offset, true);
    const double pd = m.spins.p_down(), pu = m.spins.p_up;
    return PolarizationCounts{
        pd * down.h + pu * up.h,
        pd * down.v + pu * up.v,
        pd * down.d + pu * up.d,
        pd * down.a + pu * up.a,
    };
}

} // namespace

PolarizationCounts averaged_counts(double omega_laser, const Model& model) {
    if (model.jitter.sigma == 0.0) return spin_mixture(omega_laser, model, 0.0);

    const GaussHermiteRule& rule = gauss_hermite(model.jitter.quadrature_order);
    const double scale = std::sqrt(2.0) * model.jitter.sigma;
    PolarizationCounts acc;
    for (int i = 0; i < rule.order(); ++i) {
        const PolarizationCounts c = spin_mixture(omega_laser, model, scale * rule.nodes[i]);
        const double w = rule.weights[i];
        acc.h += w * c.h;
        acc.v += w * c.v;
        acc.d += w * c.d;
        acc.a += w * c.a;
    }
    constexpr double inv_sqrt_pi = 0.5641895835477563;
    acc.h *= inv_sqrt_pi;
    acc.v *= inv_sqrt_pi;
    acc.d *= inv_sqrt_pi;
    acc.a *= inv_sqrt_pi;
    return acc;
}

McCounts averaged_counts_mc_stats(double omega_laser, const Model& model, std::uint64_t stream) {
    RandomStream rng(substream_seed(model.jitter.seed, stream));
    const long long n = model.jitter.mc_samples;

    // Welford accumulation per channel.
    double mean[4] = {0, 0, 0, 0};
    double m2[4] = {0, 0, 0, 0};
    for (long long k = 0; k < n; ++k) {
        const double offset = rng.gaussian(0.0, model.jitter.sigma);
        const bool up = rng.bernoulli(model.spins.p_up);
        const PolarizationCounts c = single_shot_counts(omega_laser, model.cavity, model.dipole, offset, up);
        const double x[4] = {c.h, c.v, c.d, c.a};
        for (int j = 0; j < 4; ++j) {
            const double delta = x[j] - mean[j];
            mean[j] += delta / static_cast<double>(k + 1);
            m2[j] += delta * (x[j] - mean[j]);
        }
    }

    McCounts out;
    out.samples = n;
    out.mean = PolarizationCounts{mean[0], mean[1], mean[2], mean[3]};
    if (n > 1) {
        const double denom = static_cast<double>(n - 1) * static_cast<double>(n);
        out.standard_error = PolarizationCounts{
            std::sqrt(m2[0] / denom),
            std::sqrt(m2[1] / denom),
            std::sqrt(m2[2] / denom),
            std::sqrt(m2[3] / denom),
        };
    }
    return out;
}

PolarizationCounts averaged_counts_mc(double omega_laser, const Model& model, std::uint64_t stream) {
    return averaged_counts_mc_stats(omega_laser, model, stream).mean;
}

} // namespace qdkerr
