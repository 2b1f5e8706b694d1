#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>

namespace orbitsieve {

using Vec3 = std::array<std::int64_t, 3>;

/// Dense 3x3 integer matrix, row-major. Vectors act as columns: x' = g.x.
struct Mat3 {
    std::array<std::int64_t, 9> a{};

    static Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    std::int64_t& operator()(int i, int j) { return a[3 * i + j]; }
    std::int64_t operator()(int i, int j) const { return a[3 * i + j]; }

    friend bool operator==(const Mat3&, const Mat3&) = default;
};

inline Mat3 operator*(const Mat3& m, const Mat3& n) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < 3; ++k) s += m(i, k) * n(k, j);
            r(i, j) = s;
        }
    return r;
}

inline Vec3 operator*(const Mat3& m, const Vec3& v) {
    Vec3 r;
    for (int i = 0; i < 3; ++i)
        r[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
    return r;
}

inline Mat3 transpose(const Mat3& m) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = m(j, i);
    return r;
}

inline std::int64_t det(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
         - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
         + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Adjugate (transposed cofactor matrix); m * adjugate(m) = det(m) * I.
inline Mat3 adjugate(const Mat3& m) {
    Mat3 r;
    r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return r;
}

/// Exact inverse for det = +-1 matrices.
inline Mat3 inverse_unimodular(const Mat3& m) {
    const std::int64_t d = det(m);
    Mat3 r = adjugate(m);
    if (d == -1)
        for (auto& x : r.a) x = -x;
    return r;
}

inline std::int64_t norm_sq(const Vec3& v) {
    return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

inline std::int64_t gcd3(const Vec3& v) {
    return std::gcd(std::gcd(std::llabs(v[0]), std::llabs(v[1])), std::llabs(v[2]));
}

struct Vec3Hash {
    std::size_t operator()(const Vec3& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

inline std::string to_string(const Vec3& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
           std::to_string(v[2]) + ")";
}

}  // namespace orbitsieve
