#ifndef QDKERR_CONFIG_HPP
#define QDKERR_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "qdkerr/model.hpp"
#include "qdkerr/scan.hpp"

namespace qdkerr {

// Aggregated, human-readable validation failure; the message lists one
// field-path per problem.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The on-disk configuration. Units are embedded in the key names (meV for
// the optical-scale energies, ueV for everything else); alternative
// parameterizations are preserved as written so that parse -> serialize ->
// parse is the identity.
struct ModelConfig {
    // cavity
    double omega_c_mev = 0.0;
    std::optional<double> kappa_mev;
    std::optional<double> q_factor;
    double eta_top = 0.9;

    // dipole
    double omega_x_mev = 0.0;
    double delta_z_uev = 2.5;
    std::optional<double> g_uev;
    std::optional<double> gamma_at_qd_uev;
    struct BetaWithTotal {
        double beta = 0.0;
        double gamma_t_uev = 0.0;
    };
    std::optional<BetaWithTotal> beta_with_total;
    std::optional<double> gamma_uev;
    double gamma_star_uev = 0.0;
    int zeeman_sign = +1;

    // jitter
    std::optional<double> sigma_uev;
    struct CalibrateFrom {
        double lorentzian_fwhm_uev = 0.0;
        double voigt_fwhm_uev = 0.0;
    };
    std::optional<CalibrateFrom> calibrate_from;
    int quadrature_order = 512;
    long long mc_samples = 100000;
    std::uint64_t seed = 0;

    // spins
    double p_up = 0.5;

    // scan
    double scan_start_uev = 0.0;
    double scan_stop_uev = 0.0;
    int scan_points = 0;
    enum class Reference { qd, cavity };
    Reference relative_to = Reference::qd;

    static ModelConfig from_file(const std::string& path);
    static ModelConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    // Builds the physical model, resolving kappa/q_factor, the coupling
    // parameterization and the jitter calibration. Throws ConfigError.
    Model resolve() const;

    // Total radiative linewidth Gamma(omega_x) + gamma of the resolved model.
    double gamma_t() const;

    double reference_energy() const;  // omega_x or omega_c [ueV]
    ScanGrid scan_grid() const;       // absolute energies
};

// FNV-1a digest of a file's bytes, as 16 hex characters.
std::string file_digest_hex(const std::string& path);

struct RunManifest {
    std::string command;
    std::string command_line;
    std::string config_path;
    std::string config_digest;
    std::uint64_t seed = 0;
    nlohmann::json extra;

    // Writes <output_path>.manifest.json; the timestamp lives only here so
    // that data files stay byte-identical across reruns.
    void write(const std::string& output_path) const;
};

} // namespace qdkerr

#endif
