#include "orbitsieve/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "orbitsieve/errors.hpp"

namespace orbitsieve {

bool OrbitBall::contains(const Vec3& v) const {
    return std::binary_search(points.begin(), points.end(), v);
}

OrbitBall orbit_ball(const OrbitSpec& spec, double T, const BallOptions& options) {
    if (T <= 0) throw ValidationError("ball radius T must be positive");
    const auto gens = spec.closure_generators();
    const double visit_limit = spec.ball_slack * T;
    const double visit_limit_sq = visit_limit * visit_limit;

    std::unordered_set<Vec3, Vec3Hash> seen;
    std::vector<Vec3> frontier;
    if (static_cast<double>(norm_sq(spec.base)) < visit_limit_sq) {
        seen.insert(spec.base);
        frontier.push_back(spec.base);
    }
    std::vector<Vec3> next;
    while (!frontier.empty()) {
        next.clear();
        for (const auto& v : frontier)
            for (const auto& g : gens) {
                const Vec3 w = g * v;
                if (static_cast<double>(norm_sq(w)) >= visit_limit_sq) continue;
                if (seen.insert(w).second) {
                    if (seen.size() > options.visited_cap)
                        throw ResourceLimitError(
                            "orbit enumeration exceeded visited-set cap of " +
                            std::to_string(options.visited_cap));
                    next.push_back(w);
                }
            }
        frontier.swap(next);
    }

    OrbitBall ball;
    ball.radius = T;
    const double t_sq = T * T;
    for (const auto& v : seen)
        if (static_cast<double>(norm_sq(v)) < t_sq) {
            Vec3 p = v;
            if (options.canonicalize_signs)
                for (auto& x : p) x = std::llabs(x);
            ball.points.push_back(p);
        }
    std::sort(ball.points.begin(), ball.points.end());
    if (options.canonicalize_signs)
        ball.points.erase(std::unique(ball.points.begin(), ball.points.end()),
                          ball.points.end());
    return ball;
}

double estimate_delta(const std::vector<std::pair<double, std::int64_t>>& samples) {
    std::vector<std::pair<double, double>> pts;  // (log T, log count)
    for (const auto& [t, c] : samples) {
        if (t <= 0 || c < 1) continue;
        pts.emplace_back(std::log(t), std::log(static_cast<double>(c)));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              pts.end());
    if (pts.size() < 2)
        throw InsufficientDataError("delta fit needs at least 2 valid (T, count) samples");

    double xb = 0, yb = 0;
    for (const auto& [x, y] : pts) {
        xb += x;
        yb += y;
    }
    xb /= static_cast<double>(pts.size());
    yb /= static_cast<double>(pts.size());
    double sxy = 0, sxx = 0;
    for (const auto& [x, y] : pts) {
        sxy += (x - xb) * (y - yb);
        sxx += (x - xb) * (x - xb);
    }
    return sxy / sxx;
}

}  // namespace orbitsieve
