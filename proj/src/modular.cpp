#include "orbitsieve/modular.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "orbitsieve/errors.hpp"

namespace orbitsieve {

namespace {

std::int64_t mod_pos(std::int64_t x, std::int64_t q) {
    const std::int64_t r = x % q;
    return r < 0 ? r + q : r;
}

Mat3 reduce(const Mat3& m, std::int64_t q) {
    Mat3 r = m;
    for (auto& x : r.a) x = mod_pos(x, q);
    return r;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1;
    b = mod_pos(b, m);
    while (e > 0) {
        if (e & 1) r = static_cast<__int128>(r) * b % m;
        b = static_cast<__int128>(b) * b % m;
        e >>= 1;
    }
    return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, nt = 1, r = m, nr = mod_pos(a, m);
    while (nr != 0) {
        const std::int64_t qt = r / nr;
        std::swap(t -= qt * nt, nt);
        std::swap(r -= qt * nr, nr);
    }
    if (r != 1) throw BadModulusError("element not invertible mod " + std::to_string(m));
    return mod_pos(t, m);
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit range
    std::int64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1 && witness; ++i) {
            x = static_cast<__int128>(x) * x % n;
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

bool is_squarefree(std::int64_t q) {
    if (q < 1) return false;
    for (std::int64_t d = 2; d * d <= q; ++d)
        if (q % (d * d) == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t q) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            out.push_back(d);
            while (q % d == 0) q /= d;
        }
    if (q > 1) out.push_back(q);
    return out;
}

ProjectiveLine projectivize(const ResidueVector& v) {
    const std::int64_t q = v.modulus;
    const auto primes = prime_factors(q);
    Vec3 rep{0, 0, 0};
    for (const std::int64_t p : primes) {
        // canonical form mod p: first nonzero entry scaled to 1
        Vec3 vp;
        for (int i = 0; i < 3; ++i) vp[i] = mod_pos(v.entries[i], p);
        int pivot = -1;
        for (int i = 0; i < 3 && pivot < 0; ++i)
            if (vp[i] != 0) pivot = i;
        if (pivot < 0)
            throw BadModulusError("vector vanishes mod " + std::to_string(p) +
                                  ", no projective image");
        const std::int64_t inv = inv_mod(vp[pivot], p);
        Vec3 cp;
        for (int i = 0; i < 3; ++i) cp[i] = mod_pos(vp[i] * inv, p);
        // CRT: rep == cp (mod p), untouched mod q/p
        const std::int64_t m = q / p;
        const std::int64_t mi = inv_mod(m, p);
        for (int i = 0; i < 3; ++i) {
            const std::int64_t lift = cp[i] * m % q * mi % q;
            rep[i] = mod_pos(rep[i] + lift, q);
        }
    }
    return ProjectiveLine{q, rep};
}

ModularOrbit orbit_mod_q(const OrbitSpec& spec, std::int64_t q, const ModulusPolicy& policy) {
    if (q < 2 || !is_squarefree(q))
        throw BadModulusError("modulus " + std::to_string(q) + " must be squarefree and >= 2");
    if (!policy.skip_bad_prime_check) {
        auto bad = spec.form.bad_primes();
        bad.insert(bad.end(), policy.extra_bad_primes.begin(), policy.extra_bad_primes.end());
        for (const std::int64_t p : bad)
            if (q % p == 0)
                throw BadModulusError("modulus " + std::to_string(q) +
                                      " shares the flagged bad prime " + std::to_string(p));
    }

    std::vector<Mat3> gens;
    for (const auto& g : spec.generators) {
        if (std::gcd(std::llabs(det(g.entries())), q) != 1)
            throw BadModulusError("generator not invertible mod " + std::to_string(q));
        gens.push_back(reduce(g.entries(), q));
        gens.push_back(reduce(inverse_unimodular(g.entries()), q));
    }

    Vec3 start;
    for (int i = 0; i < 3; ++i) start[i] = mod_pos(spec.base[i], q);

    std::unordered_set<Vec3, Vec3Hash> seen{start};
    std::vector<Vec3> frontier{start}, next;
    while (!frontier.empty()) {
        next.clear();
        for (const auto& v : frontier)
            for (const auto& g : gens) {
                Vec3 w = g * v;
                for (auto& x : w) x = mod_pos(x, q);
                if (seen.insert(w).second) next.push_back(w);
            }
        frontier.swap(next);
    }

    ModularOrbit morbit;
    morbit.modulus = q;
    morbit.point_orbit.reserve(seen.size());
    for (const auto& v : seen) morbit.point_orbit.push_back({q, v});
    std::sort(morbit.point_orbit.begin(), morbit.point_orbit.end());

    std::vector<ProjectiveLine> lines;
    lines.reserve(seen.size());
    for (const auto& v : morbit.point_orbit) lines.push_back(projectivize(v));
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    morbit.line_orbit = std::move(lines);

    const auto npts = static_cast<std::int64_t>(morbit.point_orbit.size());
    const auto nlin = static_cast<std::int64_t>(morbit.line_orbit.size());
    if (npts % nlin != 0)
        throw ConstraintError("point orbit size not a multiple of line orbit size");
    morbit.fiber_size = npts / nlin;
    return morbit;
}

std::pair<std::int64_t, std::int64_t> vanishing_counts(const ModularOrbit& morbit,
                                                       const CoordinateFunction& f) {
    const std::int64_t q = morbit.modulus;
    if (std::gcd(f.divisor(), q) != 1)
        throw BadModulusError("modulus " + std::to_string(q) +
                              " shares a factor with the normalization divisor " +
                              std::to_string(f.divisor()) + " of " + f.name());
    std::int64_t pts = 0;
    for (const auto& v : morbit.point_orbit)
        if (mod_pos(f.raw(v.entries), q) == 0) ++pts;
    std::int64_t lin = 0;
    for (const auto& l : morbit.line_orbit)
        if (mod_pos(f.raw(l.representative), q) == 0) ++lin;
    return {pts, lin};
}

LocalDensityValue local_density(const ModularOrbit& morbit, const CoordinateFunction& f,
                                DensityMode mode) {
    const auto [pts, lin] = vanishing_counts(morbit, f);
    LocalDensityValue d;
    d.modulus = morbit.modulus;
    d.numerator_points = pts;
    d.numerator_lines = lin;
    d.point_orbit_size = static_cast<std::int64_t>(morbit.point_orbit.size());
    d.line_orbit_size = static_cast<std::int64_t>(morbit.line_orbit.size());
    d.omega = mode == DensityMode::point ? Rational(pts, d.point_orbit_size)
                                         : Rational(lin, d.line_orbit_size);
    return d;
}

OmegaReference omega_reference(char example, std::int64_t p, std::int64_t min_prime) {
    if (!is_prime(p)) throw ValidationError("omega reference needs a prime modulus");
    // The closed forms hold for "sufficiently large" primes only; below the
    // threshold (or at primes dividing 60 * disc * t) compare against the
    // brute-force orbit instead.
    const std::int64_t excluded = example == 'D' ? 180 : 60;  // 60*|disc*t|
    if (p < min_prime || excluded % p == 0)
        throw ConstraintError("reference formula not applicable at p = " + std::to_string(p));
    switch (example) {
        case 'A':
            return {p % 4 == 1 ? Rational(2, p + 1) : Rational(0), false, 0.0};
        case 'B':
            return {Rational(4, p + 1), false, 0.0};
        case 'C':
            return {p % 4 == 1 ? Rational(6, p + 1) : Rational(4, p + 1), false, 0.0};
        case 'D':
            return {Rational(3, p), true, 10.0 / (static_cast<double>(p) * p)};
        default:
            throw ValidationError("unknown example label");
    }
}

}  // namespace orbitsieve
