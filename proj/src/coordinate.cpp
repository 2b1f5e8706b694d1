#include "orbitsieve/coordinate.hpp"

#include "orbitsieve/errors.hpp"

namespace orbitsieve {

CoordinateFunction::CoordinateFunction(CoordinateTag tag) : tag_(tag) {
    switch (tag) {
        case CoordinateTag::hypotenuse:
            name_ = "hypotenuse";
            divisor_ = 1;
            degree_ = 1;
            kappa_ = 1;
            break;
        case CoordinateTag::area:
            name_ = "area";
            divisor_ = 12;
            degree_ = 2;
            kappa_ = 4;
            break;
        case CoordinateTag::coord_product:
            name_ = "coord_product";
            divisor_ = 60;
            degree_ = 3;
            kappa_ = 5;
            break;
        case CoordinateTag::raw_product:
            name_ = "raw_product";
            divisor_ = 1;
            degree_ = 3;
            kappa_ = 3;
            break;
    }
}

std::int64_t CoordinateFunction::raw(const Vec3& x) const {
    switch (tag_) {
        case CoordinateTag::hypotenuse: return x[2];
        case CoordinateTag::area: return x[0] * x[1];
        case CoordinateTag::coord_product:
        case CoordinateTag::raw_product: return x[0] * x[1] * x[2];
    }
    return 0;  // unreachable
}

std::int64_t CoordinateFunction::value(const Vec3& x) const {
    const std::int64_t r = raw(x);
    if (r % divisor_ != 0)
        throw StrongPrimitivityError(name_ + " not integral at " + to_string(x) +
                                     ": " + std::to_string(r) + " not divisible by " +
                                     std::to_string(divisor_));
    return r / divisor_;
}

std::optional<CoordinateFunction> CoordinateFunction::by_name(const std::string& name) {
    for (auto tag : {CoordinateTag::hypotenuse, CoordinateTag::area,
                     CoordinateTag::coord_product, CoordinateTag::raw_product}) {
        CoordinateFunction f(tag);
        if (f.name() == name) return f;
    }
    return std::nullopt;
}

std::int64_t coordinate_value(const CoordinateFunction& f, const Vec3& x) {
    return f.value(x);
}

char example_label(CoordinateTag tag) {
    switch (tag) {
        case CoordinateTag::hypotenuse: return 'A';
        case CoordinateTag::area: return 'B';
        case CoordinateTag::coord_product: return 'C';
        case CoordinateTag::raw_product: return 'D';
    }
    return '?';
}

}  // namespace orbitsieve
