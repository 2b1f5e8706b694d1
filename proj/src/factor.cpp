#include "orbitsieve/factor.hpp"

#include <algorithm>
#include <numeric>

#include "orbitsieve/errors.hpp"
#include "orbitsieve/modular.hpp"

namespace orbitsieve {

namespace {

constexpr std::int64_t kTrialLimit = 1'000'000;

const std::vector<std::int64_t>& small_primes() {
    static const std::vector<std::int64_t> primes = [] {
        std::vector<bool> sieve(kTrialLimit + 1, true);
        std::vector<std::int64_t> out;
        for (std::int64_t i = 2; i <= kTrialLimit; ++i)
            if (sieve[i]) {
                out.push_back(i);
                for (std::int64_t j = i * i; j <= kTrialLimit; j += i) sieve[j] = false;
            }
        return out;
    }();
    return primes;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<__int128>(a) * b % m;
}

// Brent's variant of Pollard rho; n must be composite, odd, > trial limit^2 range.
std::int64_t brent_rho(std::int64_t n) {
    for (std::int64_t c = 1;; ++c) {
        std::int64_t x = 2, y = 2, d = 1;
        std::int64_t power = 1, lam = 1;
        auto step = [&](std::int64_t v) { return (mulmod(v, v, n) + c) % n; };
        y = step(x);
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = step(y);
            ++lam;
            d = std::gcd(std::llabs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_rec(std::int64_t n, std::vector<std::int64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const std::int64_t d = brent_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::int64_t> factorize(std::int64_t n) {
    if (n < 1) throw ValidationError("factorize requires n >= 1");
    std::vector<std::int64_t> out;
    for (const std::int64_t p : small_primes()) {
        if (p * p > n) break;
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

int prime_divisor_count(std::int64_t n, PrimeCounting mode) {
    if (n < 1) throw ValidationError("prime divisor count needs n >= 1");
    auto fs = factorize(n);
    if (mode == PrimeCounting::distinct)
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    return static_cast<int>(fs.size());
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

}  // namespace orbitsieve
