#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbitsieve {

enum class SieveMode {
    classic,     // point-stabilizer decomposition: alpha = (delta-theta)/(2 deg f)
    projective,  // line-stabilizer decomposition:  alpha = (delta-theta)/deg f
};

/// Spectral gap constants consumed as inputs.
inline constexpr double kThetaGamburd = 5.0 / 6.0;
inline constexpr double kThetaKimSarnak = 39.0 / 64.0;
inline constexpr double kThetaSelberg = 0.5;

double exponent_of_distribution(double delta, double theta, int degree, SieveMode mode);
double tau_parameter(double alpha, int degree, double delta);

/// Sieve problem parameters with the derived exponent of distribution and tau.
struct SieveParams {
    double delta = 1.0;
    double theta = kThetaGamburd;
    int degree = 1;
    double kappa = 1.0;
    SieveMode mode = SieveMode::classic;
    double alpha = 0.0;  // derived
    double tau = 0.0;    // derived

    static SieveParams make(double delta, double theta, int degree, double kappa,
                            SieveMode mode);
};

/// beta_kappa from the tabulated values for kappa = 1, 3, 4, 5.
double beta_for_kappa(double kappa);

/// The closed-form majorant m_{alpha,kappa}(zeta); R may be taken as any
/// integer exceeding it.
double m_zeta(double alpha, double kappa, double beta_k, double zeta);

struct RBoundResult {
    double zeta_star = 0.0;
    double m_star = 0.0;
    int R = 0;
    std::string provenance = "closed_form_m";
};

/// Minimizes m_zeta over (0, beta_k); R is the smallest integer strictly
/// above the minimum.
RBoundResult optimize_R(double alpha, double kappa, double beta_k);

/// Smallest delta (to 1e-4) at which the optimized R still equals its value
/// at delta = 1; below this threshold the bound increments. Quantifies how
/// far delta may drop below 1 before a row's R changes.
double delta_threshold_for_R(double theta, int degree, double kappa, SieveMode mode);

/// Discretized sigma_kappa / F_kappa / f_kappa on a uniform grid. The grid
/// step is snapped to 1/m so that the integer delays (2 for sigma, 1 for F
/// and f) align exactly with grid indices.
struct SieveFunctionTable {
    double kappa = 0.0;
    double alpha_k = 0.0;
    double beta_k = 0.0;
    double h = 0.0;
    int steps_per_unit = 0;
    double u_max = 0.0;
    double a_kappa = 0.0;             // A_k = (2 e^gamma)^k Gamma(k+1)
    std::vector<double> sigma;        // index i <-> u = i*h, valid from i=1
    std::vector<double> big_f;        // empty until solve_F_f
    std::vector<double> small_f;

    double sigma_at(double u) const;  // linear interpolation
    double F_at(double u) const;
    double f_at(double u) const;
    bool has_Ff() const { return !big_f.empty(); }
};

/// sigma = u^kappa / A_kappa on (0,2]; beyond, forward integration of the
/// delayed equation (u^-k sigma)' = -k u^{-k-1} sigma(u-2) with stored
/// history (trapezoidal steps).
SieveFunctionTable solve_sigma(double kappa, double u_max, double h = 1e-3);

/// Adds F = 1/sigma on (0, alpha_k], f = 0 on (0, beta_k], then integrates
/// the coupled system (uF)' = f(u-1), (uf)' = F(u-1) forward. Requires
/// alpha_k >= beta_k >= 2; the table covers (0, u_max - 1].
SieveFunctionTable solve_F_f(double kappa, double alpha_k, double beta_k,
                             SieveFunctionTable sigma_table);

/// The two-parameter integral bound: tau*u/alpha - 1 +
/// (kappa / f(tau v)) * integral_1^{v/u} F(tau v - s)(1 - (u/v) s) ds/s.
/// Preconditions: 1/tau < u <= v and beta_k < tau*v with f(tau v) > 0.
double r_bound_integral(const SieveParams& params, const SieveFunctionTable& table,
                        double u, double v);

struct SaturationRow {
    std::string example;  // A, B, C, D, D_selberg
    SieveMode mode;
    double theta = 0.0;
    double alpha = 0.0;
    double kappa = 0.0;
    double zeta_star = 0.0;
    double m_star = 0.0;
    int R = 0;
    std::string provenance;           // closed_form_m | richert_literature
    std::optional<int> literature_R;  // Richert-weight value for kappa = 1 rows
    double delta_star = 0.0;          // R holds for delta in [delta_star, 1]
};

/// All ten saturation rows: classic A/B/C/D/D_selberg and projective
/// A/B/C/D/D_selberg. The kappa = 1 rows also carry the literature
/// linear-sieve values (13 classic, 7 projective); the projective A row
/// reports R = 7 with that provenance.
std::vector<SaturationRow> saturation_table();

}  // namespace orbitsieve
