#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "orbitsieve/linalg.hpp"

namespace orbitsieve {

enum class CoordinateTag {
    hypotenuse,     // z           (Example A)
    area,           // xy / 12     (Example B)
    coord_product,  // xyz / 60    (Example C)
    raw_product,    // xyz         (Example D)
};

/// One of the homogeneous coordinate functions driving the sieve, with its
/// normalization divisor, degree, and sieve dimension.
class CoordinateFunction {
public:
    explicit CoordinateFunction(CoordinateTag tag);

    CoordinateTag tag() const { return tag_; }
    const std::string& name() const { return name_; }
    std::int64_t divisor() const { return divisor_; }
    int degree() const { return degree_; }
    double kappa() const { return kappa_; }

    /// Raw polynomial value, before dividing out the normalization constant.
    std::int64_t raw(const Vec3& x) const;

    /// raw(x) / divisor as an exact integer; throws StrongPrimitivityError
    /// when the divisor does not divide (preset/orbit mismatch).
    std::int64_t value(const Vec3& x) const;

    static std::optional<CoordinateFunction> by_name(const std::string& name);

private:
    CoordinateTag tag_;
    std::string name_;
    std::int64_t divisor_;
    int degree_;
    double kappa_;
};

std::int64_t coordinate_value(const CoordinateFunction& f, const Vec3& x);

/// Example label A/B/C/D for a coordinate function.
char example_label(CoordinateTag tag);

}  // namespace orbitsieve
