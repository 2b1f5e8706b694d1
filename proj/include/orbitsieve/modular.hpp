#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbitsieve/coordinate.hpp"
#include "orbitsieve/forms.hpp"
#include "orbitsieve/rational.hpp"

namespace orbitsieve {

bool is_squarefree(std::int64_t q);
bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t q);

/// Residue 3-vector mod a squarefree modulus, entries reduced to [0, q).
struct ResidueVector {
    std::int64_t modulus = 0;
    Vec3 entries{};

    friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
    friend auto operator<=>(const ResidueVector&, const ResidueVector&) = default;
};

/// Projective line mod squarefree q. The representative is canonical: for each
/// prime p | q the first nonzero entry mod p is scaled to 1, and the per-prime
/// forms are glued back by the Chinese remainder correspondence. Unit scaling
/// mod q is exactly unit scaling mod each prime factor, so two vectors lie on
/// the same line iff they canonicalize identically.
struct ProjectiveLine {
    std::int64_t modulus = 0;
    Vec3 representative{};

    friend bool operator==(const ProjectiveLine&, const ProjectiveLine&) = default;
    friend auto operator<=>(const ProjectiveLine&, const ProjectiveLine&) = default;
};

ProjectiveLine projectivize(const ResidueVector& v);

/// The mod-q point orbit and its projectivization. fiber_size is the constant
/// number of orbit points per line (constant because the group acts
/// transitively on its orbit).
struct ModularOrbit {
    std::int64_t modulus = 0;
    std::vector<ResidueVector> point_orbit;  // sorted
    std::vector<ProjectiveLine> line_orbit;  // sorted
    std::int64_t fiber_size = 0;
};

struct ModulusPolicy {
    /// Extra primes to reject besides the form's own bad primes.
    std::vector<std::int64_t> extra_bad_primes;
    bool skip_bad_prime_check = false;
};

/// Closure of base mod q under the orbit's generators and their inverses
/// (finite order makes monoid and group closure coincide mod q).
ModularOrbit orbit_mod_q(const OrbitSpec& spec, std::int64_t q,
                         const ModulusPolicy& policy = {});

/// (#points with raw f = 0 mod q, #lines with raw f = 0 mod q). Vanishing on a
/// line is well defined because f is homogeneous and line representatives
/// differ by units. Moduli sharing a factor with f's normalization divisor are
/// rejected.
std::pair<std::int64_t, std::int64_t> vanishing_counts(const ModularOrbit& morbit,
                                                       const CoordinateFunction& f);

enum class DensityMode { point, line };

struct LocalDensityValue {
    std::int64_t modulus = 0;
    Rational omega;
    std::int64_t numerator_points = 0;  // C(Gamma_y(q); f) as an orbit count
    std::int64_t numerator_lines = 0;   // C(Gamma_<y>(q); f)
    std::int64_t point_orbit_size = 0;
    std::int64_t line_orbit_size = 0;
};

LocalDensityValue local_density(const ModularOrbit& morbit, const CoordinateFunction& f,
                                DensityMode mode);

/// Closed-form density value for Examples A, B, C, or the asymptotic band
/// center 3/p for Example D.
struct OmegaReference {
    Rational value;       // closed form, or 3/p for Example D
    bool is_band = false; // Example D: |omega - 3/p| <= band_radius
    double band_radius = 0.0;
};

/// Reference formulas hold for primes past the configured threshold (default 7)
/// not dividing 60 * disc * t.
OmegaReference omega_reference(char example, std::int64_t p, std::int64_t min_prime = 7);

}  // namespace orbitsieve
