#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gkw/solitons.hpp"

namespace gkw {

/// J_p = <L^{-1} phi, phi> at the explicit wave in the (c = 1, mu = mu_p)
/// normalization, where mu_p = explicit_speed(p).
struct IndexReport {
    double p = 0.0;
    double j_half = 0.0;  ///< pairing over [0, r_max]
    double j_full = 0.0;  ///< pairing over the whole line, = 2 j_half
    Field rho;            ///< the even solution of L rho = phi
    double r_max = 0.0;
    std::string method;   ///< "bvp" or "spectral"
    /// |J_other - J_this| / |J_this| once both methods have run, NaN otherwise.
    double method_agreement = std::numeric_limits<double>::quiet_NaN();
    /// Relative change in j_half under refinement (r_max doubling for the
    /// BVP, N doubling for the spectral route); NaN if not checked.
    double refinement_change = std::numeric_limits<double>::quiet_NaN();
    /// Relative defect in <rho, phi^{p+1}> = -((p+1)/p) ||phi||^2, which
    /// follows from pairing L phi = -(p/(p+1)) phi^{p+1} with rho.
    double pairing_identity_error = 0.0;
};

struct BvpOptions {
    double r_max = 0.0;           ///< 0 selects the default (30 at p = 1, scaled by decay rate)
    int nodes = 0;                ///< Chebyshev nodes; 0 scales with r_max
    std::size_t output_points = 1024;
    bool check_refinement = true;
};

/// Default truncation radius: 30 at p = 1, scaled by the ratio of linear
/// decay rates for other p.
double default_r_max(double p);

/// Half-line collocation of mu_p rho'''' = rho'' - rho + phi^p rho + phi on
/// [0, r_max] as a first-order system, with rho'(0) = rho'''(0) = 0 and
/// the Robin conditions rho + rho' = 0, rho'' + rho''' = 0 at r_max.
IndexReport index_bvp(double p, const BvpOptions& options = {});

/// rho = solve_constrained(L, phi) on a periodic grid.
IndexReport index_spectral(double p, const std::optional<GridSpec>& grid = std::nullopt,
                           bool check_refinement = false);

/// Copy of `primary` with method_agreement filled from `other`.
IndexReport with_agreement(IndexReport primary, const IndexReport& other);

/// Grid used by index_spectral when none is given.
GridSpec default_index_grid(double p, std::size_t num_points = 1024);

struct ScanRow {
    double p;
    double j_half;
    double j_full;
};

/// Spectral J_p at `count` equally spaced p in [p_lo, p_hi].
std::vector<ScanRow> index_scan(double p_lo, double p_hi, int count);

/// Bisection for the sign change of p -> J_p in [p_lo, p_hi].
double critical_exponent(double p_lo = 4.0, double p_hi = 5.0, double tol = 1e-3);

}  // namespace gkw
