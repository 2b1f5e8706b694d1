#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orbitsieve/coordinate.hpp"
#include "orbitsieve/factor.hpp"
#include "orbitsieve/modular.hpp"
#include "orbitsieve/orbit.hpp"

namespace orbitsieve {

/// The weighted sequence a_n(T): a_n counts orbit points x with |x| < T and
/// |f(x)| = n. Points with f(x) = 0 are tallied separately and excluded.
struct SequenceA {
    double T = 0.0;
    std::map<std::int64_t, std::int64_t> support;  // n -> a_n, n >= 1
    std::int64_t mass = 0;                         // |A| = sum a_n
    std::int64_t zero_count = 0;                   // points with f(x) = 0
    std::int64_t max_n = 0;                        // N

    std::int64_t mass_along(std::int64_t q) const;  // |A_q| = sum over q | n
};

SequenceA build_sequence(const OrbitSpec& spec, const CoordinateFunction& f, double T,
                         const BallOptions& options = {});

struct DistributionRow {
    std::int64_t q = 0;
    std::int64_t mass_q = 0;
    double predicted = 0.0;  // omega(q) * |A|
    double abs_error = 0.0;
    double rel_error = 0.0;  // abs/predicted; infinity when predicted = 0
    bool bad_modulus = false;
};

struct DistributionReport {
    std::vector<DistributionRow> rows;  // sorted by q
};

/// Compares |A_q| with omega(q)|A| for each density value (plus the trivial
/// q = 1 row). Bad moduli are flagged, not predicted.
DistributionReport distribution_report(const SequenceA& seq,
                                       const std::vector<LocalDensityValue>& densities);

struct AlmostPrimeCount {
    std::int64_t count = 0;
    double density_ratio = 0.0;  // count * (log T)^kappa / mass
};

/// Sum of a_n over n in P_R. R = nullopt means R = infinity (all n).
AlmostPrimeCount almost_prime_count(const SequenceA& seq, const CoordinateFunction& f,
                                    std::optional<int> R,
                                    PrimeCounting counting = PrimeCounting::with_multiplicity);

}  // namespace orbitsieve
