#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitsieve/modular.hpp"
#include "orbitsieve/orbit.hpp"
#include "orbitsieve/sequence.hpp"
#include "orbitsieve/sieve.hpp"

namespace orbitsieve {

/// Writes text to path atomically (temp file + rename), creating parent
/// directories. Reruns overwrite, never append.
void write_file_atomic(const std::string& path, const std::string& contents);

std::string format_double(double v);

/// One densities.csv row; each modulus contributes a point row and a line row.
struct DensityReportRow {
    std::int64_t q = 0;
    DensityMode mode = DensityMode::point;
    std::int64_t orbit_size = 0;
    std::int64_t vanishing_count = 0;
    Rational omega;
    std::string reference_value;  // empty when no closed form applies
    std::string match_flag;       // exact | mismatch | band_ok | band_fail | n/a
};

std::string render_orbit_csv(const OrbitBall& ball);
std::string render_delta_csv(const std::vector<std::pair<double, std::int64_t>>& samples);
std::string render_densities_csv(const std::vector<DensityReportRow>& rows);
std::string render_sieve_functions_csv(const SieveFunctionTable& table, int stride);
std::string render_r_values_csv(const std::vector<SaturationRow>& rows);
std::string render_distribution_csv(const DistributionReport& report);

struct AlmostPrimeRow {
    int R = 0;
    std::int64_t count = 0;
    double density_ratio = 0.0;
};
std::string render_almost_primes_csv(const std::vector<AlmostPrimeRow>& rows);

/// Builds the per-modulus density rows (point and line modes) with reference
/// comparison for the preset's example label.
std::vector<DensityReportRow> density_rows(const ModularOrbit& morbit,
                                           const CoordinateFunction& f);

}  // namespace orbitsieve
