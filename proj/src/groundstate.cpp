#include "gkw/groundstate.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

namespace gkw {

namespace {

Field apply_elliptic(const Field& f, double mu) {
    return apply_multiplier(f, [mu](double k) { return mu * k * k * k * k + k * k + 1.0; });
}

Field solve_elliptic(const Field& f, double mu) {
    return apply_multiplier(f, [mu](double k) { return 1.0 / (mu * k * k * k * k + k * k + 1.0); });
}

}  // namespace

double beta_p(int p) {
    require(p >= 1, "beta_p needs p >= 1");
    const double pp = p;
    const double a = std::pow((pp + 1.0) * (pp + 2.0) / 2.0, 1.0 / pp);
    const double nu = 2.0 * (pp + 2.0) / pp;
    const double b = pp / 2.0;
    // integral of sech^nu(b x) dx = sqrt(pi) Gamma(nu/2) / (b Gamma((nu+1)/2))
    const double sech_integral =
        std::sqrt(std::numbers::pi) * std::exp(std::lgamma(0.5 * nu) - std::lgamma(0.5 * (nu + 1.0))) / b;
    return std::pow(a, pp + 2.0) / ((pp + 1.0) * (pp + 2.0)) * sech_integral;
}

Functionals functionals(const Field& f, double mu, int p) {
    require(f.is_finite(), "functionals: field has non-finite samples");
    require(p >= 1, "functionals needs p >= 1");
    const double i_mu = 0.5 * inner_product_l2(apply_elliptic(f, mu), f);
    double k = 0.0;
    for (double v : f.values()) k += std::pow(v, p + 2);
    k *= f.grid().spacing() / ((p + 1.0) * (p + 2.0));
    return {i_mu, k};
}

void MinimizationProblem::validate() const {
    require(p >= 1 && p <= 4, "ground states are computed for p in {1, 2, 3}");
    require(p <= 3 || allow_p4, "p = 4 is outside the covered range; set allow_p4 to proceed");
    require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
    require(std::isfinite(beta_target) && beta_target > 0.0, "beta_target must be positive");
    require(max_iterations >= 1, "max_iterations must be >= 1");
}

MinimizationProblem make_problem(int p, double mu, std::optional<double> beta, std::size_t num_points) {
    require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
    // Tail rate at c = 1 is >= 1 for every mu, so rate 1 is a safe box.
    MinimizationProblem problem{.p = p, .mu = mu, .beta_target = beta.value_or(beta_p(p)),
                                .grid = GridSpec(decay_half_length(1.0), num_points)};
    problem.validate();
    return problem;
}

GroundStateResult minimize(const MinimizationProblem& problem, const std::optional<Field>& initial_guess) {
    problem.validate();
    if (problem.p == 4)
        std::clog << "warning: minimizing with p = 4, outside the range covered by the theory\n";
    const int p = problem.p;
    const double mu = problem.mu;
    const double beta = problem.beta_target;

    Field psi = initial_guess ? *initial_guess : gkdv_soliton(1.0, p, problem.grid).field;
    require_same_grid(psi, Field(problem.grid));
    const double norm0 = sobolev_norm(psi, 0);
    require(norm0 > 0.0, "minimize: initial guess is zero");
    require(sobolev_norm(psi - even_projection(psi), 0) <= 1e-8 * norm0, "minimize: initial guess must be even");
    const double k0 = functionals(psi, mu, p).k_p;
    require(k0 > 0.0, "minimize: initial guess has K_p <= 0");
    psi *= std::pow(beta / k0, 1.0 / (p + 2.0));

    const double gamma = (p + 1.0) / p;
    GroundStateResult out{.psi = psi, .phi = psi, .history = {}};
    double diff = std::numeric_limits<double>::infinity();
    double el_residual = std::numeric_limits<double>::infinity();
    int it = 0;
    while (it < problem.max_iterations) {
        Field nonlinear = psi.pow(p + 1.0);
        nonlinear *= 1.0 / (p + 1.0);
        const double m = inner_product_l2(apply_elliptic(psi, mu), psi) / inner_product_l2(nonlinear, psi);
        Field next = solve_elliptic(nonlinear, mu);
        next *= std::pow(m, gamma);
        next = even_projection(next);
        const double k = functionals(next, mu, p).k_p;
        if (!(k > 0.0) || !next.is_finite())
            throw ComputationError("minimize: iteration lost positivity of K_p");
        next *= std::pow(beta / k, 1.0 / (p + 2.0));
        diff = sobolev_norm(next - psi, 0);
        psi = std::move(next);
        ++it;
        out.history.push_back(diff);

        if (diff < 1e-10) {
            const double alpha = 2.0 * functionals(psi, mu, p).i_mu / ((p + 2.0) * beta);
            Field el = apply_elliptic(psi, mu);
            Field rhs = psi.pow(p + 1.0);
            rhs *= alpha / (p + 1.0);
            el_residual = sobolev_norm(el - rhs, 0);
            if (el_residual < 1e-8) break;
        }
    }
    if (!(diff < 1e-10 && el_residual < 1e-8)) {
        std::ostringstream diag;
        diag << "last iterate difference " << diff << ", Euler-Lagrange residual " << el_residual
             << " after " << it << " iterations; try a finer grid (num_points > "
             << problem.grid.num_points() << ") or a larger box";
        throw ComputationError("minimize: fixed-point iteration did not converge", diag.str());
    }

    const Functionals fv = functionals(psi, mu, p);
    out.alpha = 2.0 * fv.i_mu / ((p + 2.0) * beta);
    out.i_value = fv.i_mu;
    out.iterations = it;
    out.euler_lagrange_residual = el_residual;
    out.phi = psi * std::pow(out.alpha, 1.0 / p);
    out.profile_residual = residual_norm(out.phi, {static_cast<double>(p), 1.0, mu});
    out.psi = std::move(psi);
    return out;
}

double scaling_identity_check(int p, double mu, double beta, std::size_t num_points) {
    require(std::isfinite(beta) && beta > 0.0, "beta must be positive");
    const double bp = beta_p(p);
    const double s_ref = minimize(make_problem(p, mu, bp, num_points)).i_value;
    const double s_beta = beta == bp ? s_ref : minimize(make_problem(p, mu, beta, num_points)).i_value;
    return std::abs(s_beta - std::pow(beta / bp, 2.0 / (p + 2.0)) * s_ref) / s_ref;
}

double subadditivity_gap(int p, double mu, double beta, std::size_t num_points) {
    const double bp = beta_p(p);
    require(beta > 0.0 && beta < bp, "sub-additivity needs 0 < beta < beta_p");
    const double s_full = minimize(make_problem(p, mu, bp, num_points)).i_value;
    const double s_a = minimize(make_problem(p, mu, beta, num_points)).i_value;
    const double s_b = minimize(make_problem(p, mu, bp - beta, num_points)).i_value;
    return s_a + s_b - s_full;
}

UniquenessProbe empirical_uniqueness_probe(const MinimizationProblem& problem, int num_guesses,
                                           std::uint64_t seed) {
    require(num_guesses >= 1, "num_guesses must be >= 1");
    problem.validate();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    UniquenessProbe probe;
    std::vector<Field> minimizers;
    for (int g = 0; g < num_guesses; ++g) {
        // Even, positive: a sech^2 bump plus a Gaussian of random widths.
        const double a1 = 0.5 + 2.0 * unit(rng);
        const double w1 = 0.2 + 0.8 * unit(rng);
        const double a2 = 1.5 * unit(rng);
        const double w2 = 0.5 + 3.0 * unit(rng);
        const Field guess = Field::sample(problem.grid, [&](double x) {
            const double s = 1.0 / std::cosh(w1 * x);
            return a1 * s * s + a2 * std::exp(-(x / w2) * (x / w2));
        });
        try {
            minimizers.push_back(minimize(problem, guess).psi);
            ++probe.converged;
        } catch (const ComputationError&) {
            ++probe.excluded;
        }
    }
    for (std::size_t i = 0; i < minimizers.size(); ++i)
        for (std::size_t j = i + 1; j < minimizers.size(); ++j)
            probe.spread = std::max(probe.spread, sobolev_norm(minimizers[i] - minimizers[j], 0));
    return probe;
}

std::vector<MuScanRow> mu_scan(int p, const std::vector<double>& mus, std::size_t num_points) {
    std::vector<MuScanRow> rows;
    for (double mu : mus) {
        const MinimizationProblem problem = make_problem(p, mu, std::nullopt, num_points);
        const GroundStateResult r = minimize(problem);
        const Field target = gkdv_soliton(1.0, p, problem.grid).field;
        rows.push_back({mu, r.alpha, r.i_value, sobolev_norm(r.phi - target, 1)});
    }
    return rows;
}

double alpha_slope(const std::vector<double>& mus, const std::vector<double>& alphas) {
    require(mus.size() == alphas.size() && !mus.empty(), "alpha_slope needs matching non-empty samples");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < mus.size(); ++i) {
        num += mus[i] * (alphas[i] - 1.0);
        den += mus[i] * mus[i];
    }
    return num / den;
}

double alpha_slope(const std::vector<MuScanRow>& rows) {
    std::vector<double> mus, alphas;
    for (const MuScanRow& r : rows) {
        mus.push_back(r.mu);
        alphas.push_back(r.alpha);
    }
    return alpha_slope(mus, alphas);
}

}  // namespace gkw
