#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitsieve/linalg.hpp"

namespace orbitsieve {

/// Integral symmetric Gram data for an indefinite ternary quadratic form,
/// together with the level value t = F(base) of the orbit it carries.
class TernaryForm {
public:
    /// Validates symmetry, nonzero discriminant and signature (2,1).
    TernaryForm(Mat3 gram, std::int64_t level_value);

    /// Diagonal form a*x^2 + b*y^2 + c*z^2.
    static TernaryForm diagonal(std::int64_t a, std::int64_t b, std::int64_t c,
                                std::int64_t level_value);

    const Mat3& gram() const { return gram_; }
    std::int64_t discriminant() const { return discriminant_; }
    std::int64_t level_value() const { return level_value_; }

    /// x^T F x.
    std::int64_t evaluate(const Vec3& x) const;

    /// Distinct primes dividing 2 * disc * t (t replaced by 1 on the cone t=0).
    /// Moduli sharing these factors are rejected for density work.
    std::vector<std::int64_t> bad_primes() const;

    friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

private:
    Mat3 gram_;
    std::int64_t discriminant_ = 0;
    std::int64_t level_value_ = 0;
};

std::int64_t evaluate_form(const TernaryForm& form, const Vec3& x);

/// True iff g^T F g = F entrywise.
bool is_isometry(const TernaryForm& form, const Mat3& g);

/// Integer isometry of a fixed form; construction validates g^T F g = F
/// and det in {+1, -1}.
class IsometryMatrix {
public:
    IsometryMatrix(const TernaryForm& form, Mat3 entries);

    const Mat3& entries() const { return entries_; }
    std::int64_t determinant() const { return determinant_; }

    friend bool operator==(const IsometryMatrix&, const IsometryMatrix&) = default;

private:
    Mat3 entries_;
    std::int64_t determinant_ = 0;
};

enum class ClosureMode {
    group,   // generators and their inverses
    monoid,  // generators only
};

/// Orbit description: base point, generating isometries, closure convention.
struct OrbitSpec {
    TernaryForm form;
    Vec3 base{};
    std::vector<IsometryMatrix> generators;
    ClosureMode closure_mode = ClosureMode::group;
    /// Pruning slack: BFS visits vectors with |x| < slack * T. Norms are not
    /// monotone along words in group mode, hence the default 2; the monoid
    /// tree presets have strictly increasing entries and use 1.
    double ball_slack = 2.0;

    /// Checks primitivity of base, F(base) = t, nonempty generator list.
    static OrbitSpec make(TernaryForm form, Vec3 base,
                          std::vector<Mat3> generators, ClosureMode mode,
                          double ball_slack = 2.0);

    /// Generator matrices, plus inverses in group mode.
    std::vector<Mat3> closure_generators() const;
};

/// All integer matrices with entries in [-bound, bound] satisfying
/// g^T F g = F and det g = +1 (identity excluded). Enumerated column-wise
/// against the Gram constraints, so only diagonal forms are supported.
std::vector<Mat3> search_isometries(const TernaryForm& form, std::int64_t bound);

// --- shipped presets -------------------------------------------------------

/// The three classical Pythagorean tree matrices.
Mat3 tree_matrix_a();
Mat3 tree_matrix_b();
Mat3 tree_matrix_c();

/// Full Pythagorean group: x^2+y^2-z^2, base (3,4,5), generators {A,B,C},
/// group closure.
OrbitSpec preset_pythagorean_full();

/// Thin two-generator subset {A,B}, monoid closure: orbit growth exponent
/// lands well below 1.
OrbitSpec preset_pythagorean_thin2();

/// Anisotropic form x^2+y^2-3z^2, base (1,1,1), generators found by
/// search_isometries; the generated subgroup may have finite index in
/// SO_F(Z).
OrbitSpec preset_aniso_3(std::int64_t search_bound = 12);

std::optional<OrbitSpec> preset_by_name(const std::string& name,
                                        std::int64_t aniso_search_bound = 12);
std::vector<std::string> preset_names();

}  // namespace orbitsieve
