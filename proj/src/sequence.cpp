#include "orbitsieve/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orbitsieve/errors.hpp"

namespace orbitsieve {

std::int64_t SequenceA::mass_along(std::int64_t q) const {
    if (q < 1) throw ValidationError("mass_along needs q >= 1");
    std::int64_t s = 0;
    for (const auto& [n, a] : support)
        if (n % q == 0) s += a;
    return s;
}

SequenceA build_sequence(const OrbitSpec& spec, const CoordinateFunction& f, double T,
                         const BallOptions& options) {
    if (T <= std::sqrt(static_cast<double>(norm_sq(spec.base))))
        throw ValidationError("T must exceed the base-point norm (empty ball)");
    const OrbitBall ball = orbit_ball(spec, T, options);
    SequenceA seq;
    seq.T = T;
    for (const auto& x : ball.points) {
        const std::int64_t v = f.value(x);  // throws if the preset mismatches
        if (v == 0) {
            ++seq.zero_count;
            continue;
        }
        ++seq.support[std::llabs(v)];
        ++seq.mass;
    }
    if (!seq.support.empty()) seq.max_n = seq.support.rbegin()->first;
    return seq;
}

DistributionReport distribution_report(const SequenceA& seq,
                                       const std::vector<LocalDensityValue>& densities) {
    DistributionReport report;
    // trivial modulus: omega(1) = 1
    report.rows.push_back({1, seq.mass, static_cast<double>(seq.mass), 0.0, 0.0, false});
    for (const auto& d : densities) {
        if (d.modulus < 2)
            throw ValidationError("density rows must have modulus >= 2");
        DistributionRow row;
        row.q = d.modulus;
        row.mass_q = seq.mass_along(d.modulus);
        row.predicted = d.omega.as_double() * static_cast<double>(seq.mass);
        row.abs_error = std::abs(static_cast<double>(row.mass_q) - row.predicted);
        row.rel_error = row.predicted > 0
                            ? row.abs_error / row.predicted
                            : (row.abs_error == 0.0
                                   ? 0.0
                                   : std::numeric_limits<double>::infinity());
        report.rows.push_back(row);
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const auto& a, const auto& b) { return a.q < b.q; });
    return report;
}

AlmostPrimeCount almost_prime_count(const SequenceA& seq, const CoordinateFunction& f,
                                    std::optional<int> R, PrimeCounting counting) {
    if (R && *R < 0) throw ValidationError("R must be >= 0");
    AlmostPrimeCount out;
    for (const auto& [n, a] : seq.support)
        if (!R || prime_divisor_count(n, counting) <= *R) out.count += a;
    if (seq.mass > 0)
        out.density_ratio = static_cast<double>(out.count) *
                            std::pow(std::log(seq.T), f.kappa()) /
                            static_cast<double>(seq.mass);
    return out;
}

}  // namespace orbitsieve
