#include "gkw/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "gkw/linop.hpp"
#include "linop_blocks.hpp"

namespace gkw {

using detail::Parity;
using detail::ParityBasis;

namespace {

constexpr double kInertiaThreshold = 1e-6;

double h4_distance(const Field& a, const Field& b) {
    const Field diff = a - b;
    double total = inner_product_l2(diff, diff);
    for (int order = 1; order <= 4; ++order) {
        const Field d = spectral_derivative(diff, order);
        total += inner_product_l2(d, d);
    }
    return std::sqrt(total);
}

SolitonProfile make_profile(const Field& psi, const WaveParams& params) {
    double rate = 0.0;
    try {
        rate = tail_decay_rate(psi);
    } catch (const ComputationError&) {
        rate = linear_decay_rate(params.c, params.mu);
    }
    return {params, psi.at_origin(), rate, psi};
}

}  // namespace

BranchPoint newton_correct(const Field& guess, const WaveParams& params, const ContinuationOptions& options) {
    params.validate();
    Field psi = even_projection(guess);
    double res = residual_norm(psi, params);
    std::vector<double> history{res};
    int growth = 0;
    int it = 0;
    while (!(res < options.tolerance)) {
        if (it >= options.max_newton_iterations) {
            std::ostringstream diag;
            for (double h : history) diag << h << ' ';
            throw ComputationError("Newton did not converge within the iteration budget", diag.str());
        }
        const LinearizedOperator jac = LinearizedOperator::around(psi, params);
        const Field t = even_projection(profile_residual(psi, params));
        psi = even_projection(psi - solve_constrained(jac, t));
        ++it;
        const double next = residual_norm(psi, params);
        growth = next > res ? growth + 1 : 0;
        res = next;
        history.push_back(res);
        if (!std::isfinite(res) || growth >= 3) {
            std::ostringstream diag;
            for (double h : history) diag << h << ' ';
            throw ComputationError("Newton diverged", diag.str());
        }
    }
    BranchPoint bp{.params = params, .profile = make_profile(psi, params)};
    bp.newton_residual = res;
    bp.newton_iterations = it;
    return bp;
}

Branch newton_continue(const SolitonProfile& seed, double c_target, int num_steps,
                       const ContinuationOptions& options) {
    seed.params.validate();
    require(std::isfinite(c_target) && c_target > 0.0, "c_target must be positive");
    require(num_steps >= 1, "num_steps must be >= 1");
    const double seed_res = residual_norm(seed.field, seed.params);
    const double seed_tol = std::max(options.tolerance, residual_floor(seed.field, seed.params));
    if (!(seed_res < seed_tol)) {
        std::ostringstream msg;
        msg << "newton_continue: seed residual " << seed_res << " exceeds " << seed_tol;
        throw InvalidArgument(msg.str());
    }

    const auto finish = [&](BranchPoint& bp) {
        bp.distance_to_seed = h4_distance(bp.profile.field, seed.field);
        bp.gamma = almost_orthogonality_margin(bp.profile, seed);
        if (options.compute_coercivity) {
            const CoercivityReport r = coercivity_details(bp.profile);
            bp.coercivity_margin = r.margin;
            bp.negative_count = r.negative_count;
        }
    };

    Branch branch;
    BranchPoint first = newton_correct(seed.field, seed.params, options);
    first.profile.amplitude = seed.amplitude;
    first.profile.decay_scale = seed.decay_scale;
    finish(first);
    branch.points.push_back(std::move(first));
    if (c_target == seed.params.c) return branch;

    const double c0 = seed.params.c;
    const double step = (c_target - c0) / num_steps;
    double c = c0;
    double h = step;
    int halvings = 0;
    while (std::abs(c_target - c) > 1e-14 * std::max(1.0, std::abs(c_target))) {
        if (std::abs(h) > std::abs(c_target - c)) h = c_target - c;
        WaveParams next = seed.params;
        next.c = c + h;
        try {
            BranchPoint bp = newton_correct(branch.points.back().profile.field, next, options);
            finish(bp);
            branch.points.push_back(std::move(bp));
            c = next.c;
            h = step;
            halvings = 0;
        } catch (const ComputationError& e) {
            if (++halvings > options.max_step_halvings) {
                std::ostringstream msg;
                msg << "stopped at c = " << c << " after " << options.max_step_halvings
                    << " step halvings: " << e.what() << " [" << e.diagnostics() << "]";
                branch.completed = false;
                branch.failure = msg.str();
                return branch;
            }
            h *= 0.5;
        }
    }
    return branch;
}

CoercivityReport coercivity_details(const SolitonProfile& profile) {
    const LinearizedOperator op = LinearizedOperator::around(profile.field, profile.params);
    const GridSpec& g = op.grid();
    const Field slope = spectral_derivative(profile.field, 1);

    CoercivityReport report;
    for (Parity parity : {Parity::even, Parity::odd}) {
        const ParityBasis basis(g.num_points(), parity);
        const Eigen::MatrixXd l = detail::restricted_matrix(op, basis);
        const Eigen::MatrixXd gram = detail::restricted_h2_gram(g, basis);

        const Eigen::VectorXd q = basis.restrict((parity == Parity::even ? profile.field : slope).values());
        const Eigen::Index n = q.size();
        const Eigen::HouseholderQR<Eigen::MatrixXd> qr(q);
        const Eigen::MatrixXd full = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
        const Eigen::MatrixXd z = full.rightCols(n - 1);

        const Eigen::MatrixXd lz = z.transpose() * l * z;
        const Eigen::MatrixXd gz = z.transpose() * gram * z;
        const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> constrained(
            lz, gz, Eigen::EigenvaluesOnly);
        if (constrained.info() != Eigen::Success)
            throw ComputationError("coercivity_check: generalized eigensolver failed",
                                   parity == Parity::even ? "even block" : "odd block");
        const double value = constrained.eigenvalues()[0];

        // Same inertia as L because the H^2 Gram matrix is positive definite.
        const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> free(l, gram, Eigen::EigenvaluesOnly);
        if (free.info() != Eigen::Success)
            throw ComputationError("coercivity_check: generalized eigensolver failed",
                                   parity == Parity::even ? "even block" : "odd block");
        report.negative_count += static_cast<int>((free.eigenvalues().array() < -kInertiaThreshold).count());
        if (parity == Parity::even) {
            report.even_margin = value;
            report.unconstrained_min = free.eigenvalues()[0];
        } else {
            report.odd_margin = value;
        }
    }
    report.margin = std::min(report.even_margin, report.odd_margin);
    return report;
}

double coercivity_check(const SolitonProfile& profile) { return coercivity_details(profile).margin; }

double almost_orthogonality_margin(const SolitonProfile& profile_c, const SolitonProfile& profile_seed) {
    require_same_grid(profile_c.field, profile_seed.field);
    return sobolev_norm(profile_c.field - profile_seed.field, 1);
}

double admissible_window(const Branch& branch) {
    if (branch.points.empty()) return 0.0;
    const BranchPoint& seed = branch.points.front();
    const double threshold = 0.5 * seed.coercivity_margin;
    double window = 0.0;
    for (const BranchPoint& bp : branch.points) {
        if (bp.coercivity_margin < threshold) break;
        window = std::max(window, std::abs(bp.params.c - seed.params.c));
    }
    return window;
}

}  // namespace gkw
