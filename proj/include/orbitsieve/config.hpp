#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitsieve/coordinate.hpp"
#include "orbitsieve/forms.hpp"
#include "orbitsieve/orbit.hpp"
#include "orbitsieve/sieve.hpp"

namespace orbitsieve {

/// Fully validated run configuration: preset or inline orbit, coordinate
/// function, scale, moduli, sieve parameters, output and resource settings.
/// All science parameters live here so runs are reproducible from the file.
struct RunConfig {
    std::optional<std::string> preset_name;
    OrbitSpec orbit;
    CoordinateFunction f{CoordinateTag::coord_product};
    double T = 1e4;
    std::vector<std::int64_t> moduli;
    std::vector<double> delta_samples;

    double sieve_delta = 1.0;
    double sieve_theta = kThetaGamburd;
    SieveMode sieve_mode = SieveMode::classic;
    std::optional<double> kappa_override;
    double sieve_u_max = 25.0;
    double sieve_h = 1e-3;
    std::optional<double> alpha_kappa;  // defaults to 2 when kappa = 1

    std::string out_dir = "out";
    BallOptions limits;
    int almost_prime_max_R = 10;
    bool distinct_primes = false;
    std::int64_t aniso_search_bound = 12;

    double kappa() const { return kappa_override.value_or(f.kappa()); }

    /// Effective configuration with every default filled in, as a JSON text.
    std::string echo_json() const;
};

/// Parses and validates a JSON configuration document. Unknown keys anywhere
/// are rejected; invariant violations name the offending field.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

}  // namespace orbitsieve
