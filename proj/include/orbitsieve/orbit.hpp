#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbitsieve/forms.hpp"
#include "orbitsieve/linalg.hpp"

namespace orbitsieve {

/// Orbit points inside a Euclidean ball, lexicographically sorted.
struct OrbitBall {
    double radius = 0.0;
    std::vector<Vec3> points;

    std::size_t count() const { return points.size(); }
    bool contains(const Vec3& v) const;
};

struct BallOptions {
    /// Abort enumeration once the visited set exceeds this many vectors.
    std::size_t visited_cap = 100'000'000;
    /// Report points with entries replaced by absolute values (cone orbits
    /// carry sign flips that are often noise for divisibility work).
    bool canonicalize_signs = false;
};

/// Exact set {x in closure(base) : |x| < T}. BFS over generator words,
/// visiting vectors with |x| < slack * T; deterministic (output sorted).
OrbitBall orbit_ball(const OrbitSpec& spec, double T, const BallOptions& options = {});

/// Least-squares slope of log(count) against log(T). Samples with count < 1
/// or non-positive or duplicated T are dropped; fewer than 2 left is an error.
double estimate_delta(const std::vector<std::pair<double, std::int64_t>>& samples);

}  // namespace orbitsieve
