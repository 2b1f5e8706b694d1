#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orbitsieve {

/// Exact rational with int64 parts, always normalized (den > 0, gcd = 1).
/// Magnitudes here stay tiny (orbit sizes and coset counts), so no overflow
/// guard beyond the density use cases is attempted.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }
    explicit Rational(std::int64_t n) : num_(n), den_(1) {}

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double as_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend auto operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(std::abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace orbitsieve
