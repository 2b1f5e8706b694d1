#include "orbitsieve/forms.hpp"

#include <algorithm>
#include <cmath>

#include "orbitsieve/errors.hpp"

namespace orbitsieve {

namespace {

// Signature of a symmetric 3x3 integer matrix via Descartes' rule on the
// characteristic polynomial: all roots are real, so the number of positive
// eigenvalues equals the number of sign changes in the coefficients of
// p(s) = s^3 - tr*s^2 + m2*s - det.
std::pair<int, int> signature(const Mat3& m) {
    const std::int64_t tr = m(0, 0) + m(1, 1) + m(2, 2);
    const std::int64_t m2 = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) +
                            (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
                            (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
    const std::int64_t d = det(m);
    auto changes = [](std::int64_t c3, std::int64_t c2, std::int64_t c1, std::int64_t c0) {
        int n = 0;
        std::int64_t prev = c3;
        for (std::int64_t c : {c2, c1, c0}) {
            if (c != 0) {
                if ((prev > 0) != (c > 0)) ++n;
                prev = c;
            }
        }
        return n;
    };
    const int pos = changes(1, -tr, m2, -d);
    const int neg = changes(-1, -tr, -m2, -d);  // p(-s) up to sign
    return {pos, neg};
}

std::vector<std::int64_t> distinct_prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    n = std::llabs(n);
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

TernaryForm::TernaryForm(Mat3 gram, std::int64_t level_value)
    : gram_(gram), level_value_(level_value) {
    if (gram_ != transpose(gram_))
        throw ValidationError("form gram matrix must be symmetric");
    discriminant_ = det(gram_);
    if (discriminant_ == 0)
        throw ValidationError("form is degenerate (discriminant 0)");
    if (signature(gram_) != std::pair<int, int>{2, 1})
        throw ValidationError("form must have signature (2,1)");
}

TernaryForm TernaryForm::diagonal(std::int64_t a, std::int64_t b, std::int64_t c,
                                  std::int64_t level_value) {
    return TernaryForm(Mat3{{a, 0, 0, 0, b, 0, 0, 0, c}}, level_value);
}

std::int64_t TernaryForm::evaluate(const Vec3& x) const {
    std::int64_t s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += x[i] * gram_(i, j) * x[j];
    return s;
}

std::vector<std::int64_t> TernaryForm::bad_primes() const {
    const std::int64_t t = level_value_ == 0 ? 1 : level_value_;
    return distinct_prime_factors(2 * discriminant_ * t);
}

std::int64_t evaluate_form(const TernaryForm& form, const Vec3& x) {
    return form.evaluate(x);
}

bool is_isometry(const TernaryForm& form, const Mat3& g) {
    return transpose(g) * form.gram() * g == form.gram();
}

IsometryMatrix::IsometryMatrix(const TernaryForm& form, Mat3 entries)
    : entries_(entries), determinant_(det(entries)) {
    if (!is_isometry(form, entries_))
        throw ValidationError("matrix is not an isometry: g^T F g != F");
    if (determinant_ != 1 && determinant_ != -1)
        throw ValidationError("isometry determinant must be +-1");
}

OrbitSpec OrbitSpec::make(TernaryForm form, Vec3 base, std::vector<Mat3> generators,
                          ClosureMode mode, double ball_slack) {
    if (gcd3(base) != 1)
        throw ValidationError("orbit base vector must be primitive (gcd 1)");
    if (form.evaluate(base) != form.level_value())
        throw ValidationError("F(base) != level value t of the form");
    if (generators.empty())
        throw ValidationError("orbit needs at least one generator");
    if (ball_slack < 1.0)
        throw ValidationError("ball slack must be >= 1");
    OrbitSpec spec{std::move(form), base, {}, mode, ball_slack};
    spec.generators.reserve(generators.size());
    for (const auto& g : generators)
        spec.generators.emplace_back(spec.form, g);  // validates g^T F g = F
    return spec;
}

std::vector<Mat3> OrbitSpec::closure_generators() const {
    std::vector<Mat3> out;
    out.reserve(generators.size() * (closure_mode == ClosureMode::group ? 2 : 1));
    for (const auto& g : generators) out.push_back(g.entries());
    if (closure_mode == ClosureMode::group)
        for (const auto& g : generators) {
            Mat3 inv = inverse_unimodular(g.entries());
            if (std::find(out.begin(), out.end(), inv) == out.end()) out.push_back(inv);
        }
    return out;
}

std::vector<Mat3> search_isometries(const TernaryForm& form, std::int64_t bound) {
    const Mat3& F = form.gram();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && F(i, j) != 0)
                throw ValidationError("isometry search supports diagonal forms only");
    const std::int64_t da = F(0, 0), db = F(1, 1), dc = F(2, 2);

    // Column k of g must have F-norm F(k,k); distinct columns F-orthogonal.
    auto columns_with_norm = [&](std::int64_t target) {
        std::vector<Vec3> cols;
        for (std::int64_t x = -bound; x <= bound; ++x)
            for (std::int64_t y = -bound; y <= bound; ++y)
                for (std::int64_t z = -bound; z <= bound; ++z)
                    if (da * x * x + db * y * y + dc * z * z == target)
                        cols.push_back({x, y, z});
        return cols;
    };
    auto fdot = [&](const Vec3& u, const Vec3& v) {
        return da * u[0] * v[0] + db * u[1] * v[1] + dc * u[2] * v[2];
    };

    const auto cols0 = columns_with_norm(da);
    const auto cols1 = da == db ? cols0 : columns_with_norm(db);
    const auto cols2 = columns_with_norm(dc);

    std::vector<Mat3> out;
    for (const auto& c0 : cols0)
        for (const auto& c1 : cols1) {
            if (fdot(c0, c1) != 0) continue;
            for (const auto& c2 : cols2) {
                if (fdot(c0, c2) != 0 || fdot(c1, c2) != 0) continue;
                Mat3 g;
                for (int i = 0; i < 3; ++i) {
                    g(i, 0) = c0[i];
                    g(i, 1) = c1[i];
                    g(i, 2) = c2[i];
                }
                if (det(g) == 1 && g != Mat3::identity()) out.push_back(g);
            }
        }
    return out;
}

Mat3 tree_matrix_a() { return Mat3{{1, -2, 2, 2, -1, 2, 2, -2, 3}}; }
Mat3 tree_matrix_b() { return Mat3{{1, 2, 2, 2, 1, 2, 2, 2, 3}}; }
Mat3 tree_matrix_c() { return Mat3{{-1, 2, 2, -2, 1, 2, -2, 2, 3}}; }

OrbitSpec preset_pythagorean_full() {
    return OrbitSpec::make(TernaryForm::diagonal(1, 1, -1, 0), {3, 4, 5},
                           {tree_matrix_a(), tree_matrix_b(), tree_matrix_c()},
                           ClosureMode::group, 2.0);
}

OrbitSpec preset_pythagorean_thin2() {
    return OrbitSpec::make(TernaryForm::diagonal(1, 1, -1, 0), {3, 4, 5},
                           {tree_matrix_a(), tree_matrix_b()}, ClosureMode::monoid,
                           1.0);
}

OrbitSpec preset_aniso_3(std::int64_t search_bound) {
    TernaryForm form = TernaryForm::diagonal(1, 1, -3, -1);
    auto gens = search_isometries(form, search_bound);
    if (gens.empty())
        throw ValidationError("isometry search found no generators; raise the bound");
    return OrbitSpec::make(std::move(form), {1, 1, 1}, std::move(gens),
                           ClosureMode::group, 2.0);
}

std::optional<OrbitSpec> preset_by_name(const std::string& name,
                                        std::int64_t aniso_search_bound) {
    if (name == "pythagorean_full") return preset_pythagorean_full();
    if (name == "pythagorean_thin2") return preset_pythagorean_thin2();
    if (name == "aniso_3") return preset_aniso_3(aniso_search_bound);
    return std::nullopt;
}

std::vector<std::string> preset_names() {
    return {"pythagorean_full", "pythagorean_thin2", "aniso_3"};
}

}  // namespace orbitsieve
