// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbitsieve/factor.hpp"
#include "orbitsieve/modular.hpp"
#include "orbitsieve/orbit.hpp"
#include "orbitsieve/sequence.hpp"
#include "orbitsieve/sieve.hpp"

using namespace orbitsieve;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string title;
    bool ok = true;
    std::ostringstream notes;
    Clock::time_point t0 = Clock::now();

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << "  [" << what << "]";
        }
    }
    void finish(double budget_seconds = 0.0) {
        const double secs =
            std::chrono::duration<double>(Clock::now() - t0).count();
        if (budget_seconds > 0 && secs > budget_seconds) {
            ok = false;
            notes << "  [runtime " << secs << "s over budget " << budget_seconds << "s]";
        }
        std::printf("%s criterion %d: %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", id,
                    title.c_str(), secs, notes.str().c_str());
        if (!ok) ++failures;
    }
};

double slope_fit(const std::vector<std::pair<double, double>>& pts) {
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

const std::vector<std::int64_t> kTestPrimes{7, 11, 13, 17, 19, 29};

void criterion1_r_values() {
    Criterion c{1, "R-value reproduction"};
    struct Reference {
        double alpha, kappa, zeta, m, tol;
    };
    const Reference reference[] = {
        {1.0 / 12, 1, 0.12, 13.93, 0.05},  {1.0 / 24, 4, 0.16, 39.28, 0.05},
        {1.0 / 36, 5, 0.136, 57.3, 0.15},  {(1 - 39.0 / 64) / 6, 3, 0.186, 25.26, 0.05},
        {0.5 / 6, 3, 0.23, 21.3, 0.15},    {1.0 / 12, 4, 0.295, 24.99, 0.05},
        {1.0 / 18, 5, 0.25, 36.3, 0.15},   {(1 - 39.0 / 64) / 3, 3, 0.33, 15.9, 0.15},
        {0.5 / 3, 3, 0.4, 13.7, 0.15},
    };
    for (const auto& q : reference) {
        const double m = m_zeta(q.alpha, q.kappa, beta_for_kappa(q.kappa), q.zeta);
        c.require(std::abs(m - q.m) <= q.tol,
                  "m(" + std::to_string(q.zeta) + ") = " + std::to_string(m) +
                      " vs reference " + std::to_string(q.m));
    }
    const auto rows = saturation_table();
    std::vector<int> classic, projective_m;
    for (const auto& r : rows) {
        if (r.mode == SieveMode::classic) classic.push_back(r.R);
        else if (r.provenance == "closed_form_m") projective_m.push_back(r.R);
    }
    c.require(classic == std::vector<int>{14, 40, 58, 26, 22}, "classic R set");
    c.require(projective_m == std::vector<int>{25, 37, 16, 14}, "projective R set");
    c.finish(5.0);
}

void criterion2_doubling() {
    Criterion c{2, "doubling law for the exponent of distribution"};
    for (const double delta : {0.85, 0.9, 0.95, 1.0})
        for (const double theta : {0.5, 39.0 / 64, 0.7, 5.0 / 6})
            for (const int deg : {1, 2, 3, 4}) {
                if (theta >= delta) continue;
                const double cl =
                    exponent_of_distribution(delta, theta, deg, SieveMode::classic);
                const double pr =
                    exponent_of_distribution(delta, theta, deg, SieveMode::projective);
                c.require(pr == 2.0 * cl, "alpha doubling at delta=" +
                                              std::to_string(delta));
            }
    c.finish();
}

void criterion3_local_densities() {
    Criterion c{3, "local-density closed forms (A/B/C exact, D in 10/p^2 band)"};
    const auto pyth = preset_pythagorean_full();
    const CoordinateFunction fs[]{CoordinateFunction(CoordinateTag::hypotenuse),
                                  CoordinateFunction(CoordinateTag::area),
                                  CoordinateFunction(CoordinateTag::coord_product)};
    for (const std::int64_t p : kTestPrimes) {
        const auto m = orbit_mod_q(pyth, p);
        for (const auto& f : fs) {
            const auto d = local_density(m, f, DensityMode::point);
            const auto ref = omega_reference(example_label(f.tag()), p);
            c.require(d.omega == ref.value,
                      std::string(1, example_label(f.tag())) + " p=" +
                          std::to_string(p) + ": omega " + d.omega.str() + " != " +
                          ref.value.str());
        }
    }
    const auto aniso = preset_aniso_3();
    const CoordinateFunction fD(CoordinateTag::raw_product);
    for (const std::int64_t p : kTestPrimes) {
        const auto d = local_density(orbit_mod_q(aniso, p), fD, DensityMode::point);
        const auto ref = omega_reference('D', p);
        const double err = std::abs(d.omega.as_double() - ref.value.as_double());
        c.require(err <= ref.band_radius,
                  "D p=" + std::to_string(p) + ": omega=" + d.omega.str() +
                      " |err|=" + std::to_string(err) + " > 10/p^2=" +
                      std::to_string(ref.band_radius));
    }
    c.finish(120.0);
}

void criterion4_point_line_and_multiplicativity() {
    Criterion c{4, "point/line density agreement and multiplicativity"};
    const auto pyth = preset_pythagorean_full();
    const CoordinateFunction fC(CoordinateTag::coord_product);
    std::map<std::int64_t, Rational> omega;
    std::vector<std::int64_t> moduli = kTestPrimes;
    for (const std::int64_t q : {77, 91, 143}) moduli.push_back(q);
    for (const std::int64_t q : moduli) {
        const auto m = orbit_mod_q(pyth, q);
        const auto dp = local_density(m, fC, DensityMode::point);
        const auto dl = local_density(m, fC, DensityMode::line);
        c.require(dp.omega == dl.omega, "point != line at q=" + std::to_string(q));
        omega[q] = dp.omega;
    }
    for (const auto& [q1, q2] :
         std::vector<std::pair<std::int64_t, std::int64_t>>{{7, 11}, {7, 13}, {11, 13}}) {
        c.require(omega[q1 * q2] == omega[q1] * omega[q2],
                  "omega(" + std::to_string(q1 * q2) + ") != product");
    }
    // the anisotropic preset agrees point/line as well
    const auto aniso = preset_aniso_3();
    const CoordinateFunction fD(CoordinateTag::raw_product);
    for (const std::int64_t p : {7, 13}) {
        const auto m = orbit_mod_q(aniso, p);
        c.require(local_density(m, fD, DensityMode::point).omega ==
                      local_density(m, fD, DensityMode::line).omega,
                  "aniso point != line at p=" + std::to_string(p));
    }
    c.finish(300.0);
}

void criterion5_orbit_scaling() {
    Criterion c{5, "orbit-size scaling over p in {7..29} (least-squares exponents)"};
    const auto pyth = preset_pythagorean_full();
    std::vector<std::pair<double, double>> pts, lns;
    for (const std::int64_t p : primes_in_range(7, 29)) {
        const auto m = orbit_mod_q(pyth, p);
        pts.emplace_back(std::log(static_cast<double>(p)),
                         std::log(static_cast<double>(m.point_orbit.size())));
        lns.emplace_back(std::log(static_cast<double>(p)),
                         std::log(static_cast<double>(m.line_orbit.size())));
        c.notes << "  p=" << p << ": " << m.point_orbit.size() << "/"
                << m.line_orbit.size();
    }
    const double sp = slope_fit(pts), sl = slope_fit(lns);
    c.notes << "  point-slope=" << sp << " line-slope=" << sl;
    c.require(sp >= 1.7 && sp <= 2.3, "point exponent outside [1.7, 2.3]");
    c.require(sl >= 0.7 && sl <= 1.3, "line exponent outside [0.7, 1.3]");
    c.finish();
}

void criterion6_divisibility() {
    Criterion c{6, "divisibility invariants on the cone up to T = 1e4"};
    const auto ball = orbit_ball(preset_pythagorean_full(), 1e4);
    std::int64_t violations = 0;
    for (const auto& p : ball.points) {
        if ((p[0] * p[1]) % 12 != 0) ++violations;
        if ((p[0] * p[1] * p[2]) % 60 != 0) ++violations;
    }
    c.notes << "  points=" << ball.count();
    c.require(violations == 0, std::to_string(violations) + " violations");
    c.require(ball.count() > 1000, "suspiciously small enumeration");
    c.finish(60.0);
}

void criterion7_delta() {
    Criterion c{7, "critical-exponent estimates"};
    const std::vector<double> radii{1e3, 1e4, 1e5};
    for (const auto& [name, spec, lo, hi] :
         std::vector<std::tuple<std::string, OrbitSpec, double, double>>{
             {"pythagorean_full", preset_pythagorean_full(), 0.9, 1.05},
             {"pythagorean_thin2", preset_pythagorean_thin2(), 0.5, 0.95}}) {
        std::vector<std::pair<double, std::int64_t>> samples;
        for (const double t : radii)
            samples.emplace_back(t,
                                 static_cast<std::int64_t>(orbit_ball(spec, t).count()));
        const double d = estimate_delta(samples);
        c.notes << "  " << name << ": delta=" << d;
        c.require(d > lo && d < hi, name + " delta outside (" + std::to_string(lo) +
                                        ", " + std::to_string(hi) + ")");
    }
    c.finish();
}

void criterion8_sieve_solver() {
    Criterion c{8, "sieve-function solver"};
    const auto table = solve_F_f(1, 2.0, 2.0, solve_sigma(1, 25.0, 1e-3));

    // branch join at u = 2 via extrapolation from the integrated side
    double xs[4], ys[4];
    for (int k = 0; k < 4; ++k) {
        xs[k] = 2.0 + table.h * (k + 1);
        ys[k] = table.sigma_at(xs[k]);
    }
    double join = 0;
    for (int i = 0; i < 4; ++i) {
        double li = 1;
        for (int j = 0; j < 4; ++j)
            if (j != i) li *= (2.0 - xs[j]) / (xs[i] - xs[j]);
        join += ys[i] * li;
    }
    const double a1 = 2.0 * std::exp(std::numbers::egamma);
    c.require(std::abs(join - 2.0 / a1) < 1e-9, "sigma branch join >= 1e-9");

    double window_err = 0;
    for (double u = 2.0; u <= 4.0; u += 1e-3) {
        const double closed = (2.0 * u - 2.0 + u * std::log(2.0 / u)) / a1;
        window_err = std::max(window_err, std::abs(table.sigma_at(u) - closed));
    }
    c.require(window_err < 1e-6, "sigma (2,4] error vs closed form");

    bool monotone = true;
    double prev_F = table.F_at(0.5), prev_f = table.f_at(0.5);
    for (double u = 0.5; u <= 20.0; u += 1e-2) {
        const double F = table.F_at(u), f = table.f_at(u);
        // slack covers trapezoid noise (~1e-8) where F and f meet at 1
        if (F > prev_F + 1e-9 || f < prev_f - 1e-9 || F < f - 1e-6) monotone = false;
        prev_F = F;
        prev_f = f;
    }
    c.require(monotone, "F nonincreasing / f nondecreasing / F >= f");
    c.require(std::abs(table.F_at(10.0) - 1.0) < 0.05, "|F - 1| at beta+8");
    c.require(std::abs(1.0 - table.f_at(10.0)) < 0.05, "|1 - f| at beta+8");

    const auto fine = solve_F_f(1, 2.0, 2.0, solve_sigma(1, 25.0, 5e-4));
    double step_err = 0;
    for (double u = 0.5; u <= 20.0; u += 0.1) {
        step_err = std::max(step_err, std::abs(table.sigma_at(u) - fine.sigma_at(u)));
        step_err = std::max(step_err, std::abs(table.F_at(u) - fine.F_at(u)));
        step_err = std::max(step_err, std::abs(table.f_at(u) - fine.f_at(u)));
    }
    c.require(step_err < 1e-4, "halving h moved values by " + std::to_string(step_err));
    c.finish(30.0);
}

void criterion9_distribution() {
    Criterion c{9, "distribution |A_q| vs omega(q)|A| at T = 1e4"};
    const auto spec = preset_pythagorean_full();
    const CoordinateFunction fC(CoordinateTag::coord_product);
    const auto seq = build_sequence(spec, fC, 1e4);
    c.notes << "  mass=" << seq.mass;
    for (const std::int64_t q : {7, 11, 13, 17, 19}) {
        const auto d = local_density(orbit_mod_q(spec, q), fC, DensityMode::line);
        const double predicted = d.omega.as_double() * static_cast<double>(seq.mass);
        const double rel =
            std::abs(static_cast<double>(seq.mass_along(q)) - predicted) / predicted;
        c.notes << "  q=" << q << ": rel=" << rel;
        c.require(rel < 0.2, "rel_error at q=" + std::to_string(q));
    }
    c.finish();
}

void criterion10_almost_primes() {
    Criterion c{10, "almost-prime harness"};
    const auto tree = OrbitSpec::make(TernaryForm::diagonal(1, 1, -1, 0), {3, 4, 5},
                                      {tree_matrix_a(), tree_matrix_b(), tree_matrix_c()},
                                      ClosureMode::monoid, 1.0);
    const CoordinateFunction fC(CoordinateTag::coord_product);
    const auto micro = build_sequence(tree, fC, 30.0);
    const std::map<std::int64_t, std::int64_t> expect{{1, 1}, {13, 1}, {34, 1}};
    c.require(micro.support == expect, "T=30 fixture support mismatch");

    const auto seq = build_sequence(preset_pythagorean_full(), fC, 2000.0);
    std::int64_t prev = -1;
    for (int r = 0; r <= 12; ++r) {
        const auto cnt = almost_prime_count(seq, fC, r);
        c.require(cnt.count >= prev, "counts decreased at R=" + std::to_string(r));
        prev = cnt.count;
    }
    c.require(almost_prime_count(seq, fC, std::nullopt).count == seq.mass,
              "count(R=inf) != mass");
    c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    void (*criteria[])() = {
        criterion1_r_values,  criterion2_doubling,
        criterion3_local_densities, criterion4_point_line_and_multiplicativity,
        criterion5_orbit_scaling,   criterion6_divisibility,
        criterion7_delta,           criterion8_sieve_solver,
        criterion9_distribution,    criterion10_almost_primes,
    };
    if (argc > 1) {
        for (int i = 1; i < argc; ++i) {
            const int id = std::atoi(argv[i]);
            if (id < 1 || id > 10) {
                std::fprintf(stderr, "criterion ids run 1..10\n");
                return 2;
            }
            criteria[id - 1]();
        }
    } else {
        for (const auto& run : criteria) run();
    }
    if (failures != 0)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
