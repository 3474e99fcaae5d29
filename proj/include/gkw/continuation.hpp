#pragma once

#include <string>
#include <vector>

#include "gkw/solitons.hpp"

namespace gkw {

struct BranchPoint {
    WaveParams params;
    SolitonProfile profile;
    double newton_residual = 0.0;
    int newton_iterations = 0;
    double coercivity_margin = 0.0;
    /// (sum_{j<=4} ||d^j (phi - seed)||^2)^{1/2}
    double distance_to_seed = 0.0;
    /// ||phi - seed||_{H^1}
    double gamma = 0.0;
    /// Negative eigenvalues of L at this point; -1 when coercivity is skipped
    int negative_count = -1;
};

struct ContinuationOptions {
    double tolerance = 1e-9;  ///< Newton target; the seed check is relaxed to residual_floor on fine grids
    int max_newton_iterations = 25;
    int max_step_halvings = 6;
    bool compute_coercivity = true;
};

struct Branch {
    std::vector<BranchPoint> points;
    bool completed = true;
    std::string failure;  ///< empty when completed
};

/// Natural-parameter continuation in c at fixed (p, mu), starting from
/// `seed`. Each step runs Newton on mu psi'''' - psi'' + c psi - psi^{p+1}/(p+1)
/// with the Jacobian inverted on the even subspace. The first point is
/// the (re-verified) seed itself.
Branch newton_continue(const SolitonProfile& seed, double c_target, int num_steps,
                       const ContinuationOptions& options = {});

/// Newton solve at a single speed from an even initial guess.
BranchPoint newton_correct(const Field& guess, const WaveParams& params,
                           const ContinuationOptions& options = {});

struct CoercivityReport {
    double margin = 0.0;            ///< min of the two constrained values
    double even_margin = 0.0;       ///< even block, constraint <v, phi> = 0
    double odd_margin = 0.0;        ///< odd block, constraint <v, phi'> = 0
    double unconstrained_min = 0.0; ///< smallest <Lv,v>/||v||_{H^2}^2 without constraints
    int negative_count = 0;         ///< inertia of L, the near-zero kernel excluded
};

/// Smallest value of <Lv, v> / ||v||_{H^2}^2 over v orthogonal (L2) to phi
/// and phi'. Positive means the coercivity hypothesis holds at this
/// resolution.
CoercivityReport coercivity_details(const SolitonProfile& profile);
double coercivity_check(const SolitonProfile& profile);

/// ||phi_c - phi_seed||_{H^1}.
double almost_orthogonality_margin(const SolitonProfile& profile_c, const SolitonProfile& profile_seed);

/// Largest |c - c_seed| such that every branch point up to that distance
/// keeps coercivity_margin >= half the seed's margin.
double admissible_window(const Branch& branch);

}  // namespace gkw
