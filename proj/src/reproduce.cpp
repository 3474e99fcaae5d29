#include "gkw/reproduce.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <thread>

#include "gkw/continuation.hpp"
#include "gkw/evolution.hpp"
#include "gkw/groundstate.hpp"
#include "gkw/index.hpp"
#include "gkw/linop.hpp"

namespace gkw {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string num(double v) { return fmt("%.6g", v); }

std::string tag(const char* base, int p) { return std::string(base) + "_p" + std::to_string(p); }

std::string mu_tag(double mu) { return fmt("%g", mu); }

using Rows = std::vector<ReproductionReport>;

// ---- 1: stability index ----------------------------------------------------------

constexpr std::array<double, 5> kPaperJ{-10.0787, -1.9325, -0.5649, -0.1443, 0.0252};

// Which of <rho, phi> on [0, r_max] or on the full line sits closer to the tabulated value.
std::string matching_convention(const IndexReport& r, double paper) {
    return std::abs(r.j_half - paper) <= std::abs(r.j_full - paper) ? "half-line" : "full-line";
}

Rows index_items() {
    Rows rows;
    for (int p = 1; p <= 5; ++p) {
        const double paper = kPaperJ[p - 1];
        const IndexReport bvp = index_bvp(p);
        const IndexReport spec = index_spectral(p);
        const double agreement = with_agreement(bvp, spec).method_agreement;
        // 2% relative, written in the max(1, |paper|) convention.
        rows.push_back(make_report("J" + std::to_string(p), 1, paper, bvp.j_half,
                                   0.02 * std::abs(paper) / std::max(1.0, std::abs(paper)),
                                   "half-line BVP, r_max " + num(bvp.r_max) + "; spectral " + num(spec.j_half) +
                                       "; matching convention " + matching_convention(bvp, paper)));
        rows.push_back(make_check("J" + std::to_string(p) + "_sign", 1,
                                  std::signbit(bvp.j_half) == std::signbit(paper)));
        rows.push_back(make_report("J" + std::to_string(p) + "_method_agreement", 1, 0.0, agreement, 1e-3,
                                   "relative BVP vs spectral difference"));
    }
    return rows;
}

// ---- 2: critical exponent ---------------------------------------------------------

Rows pcrit_items() {
    const double pc = critical_exponent(4.0, 5.0, 1e-4);
    return {make_absolute_report("p_crit", 2, 4.84, pc, 0.05, "bisection on the sign of J_p, tolerance 1e-4")};
}

// ---- 3: spectral properties -------------------------------------------------------

Rows spectral_items() {
    Rows rows;
    for (int p = 1; p <= 5; ++p) {
        const GridSpec grid = default_index_grid(p);
        const SolitonProfile phi = explicit_gkw_soliton(p, grid, explicit_speed(p));
        const SpectrumReport s = bottom_spectrum(LinearizedOperator::assemble(phi), 4);
        rows.push_back(make_report(tag("negative_count", p), 3, 1.0, s.negative_count, 0.0,
                                   "lowest eigenvalue " + num(s.eigenvalues.front())));
        rows.push_back(make_check(tag("kernel_found", p), 3, s.kernel_found,
                                  "eigenvalue " + num(s.kernel_eigenvalue)));
        rows.push_back(make_check(tag("kernel_alignment", p), 3, s.kernel_alignment > 0.999,
                                  "cosine with phi' " + fmt("%.10f", s.kernel_alignment)));
        const SpectrumReport free = bottom_spectrum(LinearizedOperator::potential_free(phi.params, grid), 3);
        // The operator is circulant, so its eigenvalues are the symbol on the grid wavenumbers. The
        // dense solve carries an eps * |symbol(k_max)| error and is only reported alongside.
        ReproductionReport floor_row =
            make_absolute_report(tag("essential_floor", p), 3, phi.params.c, s.essential_floor, 1e-10);
        floor_row.detail = "dense eigensolver " + fmt("%.12f", free.eigenvalues.front());
        rows.push_back(std::move(floor_row));
    }
    return rows;
}

// ---- 4: Albert criterion ----------------------------------------------------------

Rows albert_items() {
    Rows rows;
    for (int p = 1; p <= 5; ++p) {
        const AlbertReport a = albert_criterion(p, 50.0, 4000);
        rows.push_back(make_check(tag("albert_positivity", p), 4, a.positivity_ok,
                                  "min transform ratio " + num(a.min_transform_ratio)));
        rows.push_back(make_check(tag("albert_logconcavity", p), 4, a.logconcavity_ok,
                                  "max log-curvature " + num(a.max_curvature)));
    }
    rows.push_back(make_absolute_report("log_curvature_at_1", 4, -0.92600, sech4_log_curvature(1.0), 1e-4));
    return rows;
}

// ---- 5: closed-form residuals -----------------------------------------------------

Rows residual_items() {
    Rows rows;
    for (int p = 1; p <= 5; ++p) {
        const GridSpec g = default_grid({double(p), explicit_speed(p), 1.0}, 2048);
        const SolitonProfile e = explicit_gkw_soliton(p, g, 1.0);
        rows.push_back(make_report(tag("explicit_residual", p), 5, 0.0, closed_form_residual(e), 1e-8,
                                   "spectral residual " + num(residual_norm(e.field, e.params))));
        const GridSpec gk = default_grid({double(p), 1.0, 0.0}, 2048);
        const SolitonProfile k = gkdv_soliton(1.0, p, gk);
        rows.push_back(make_report(tag("gkdv_residual", p), 5, 0.0, closed_form_residual(k), 1e-8,
                                   "spectral residual " + num(residual_norm(k.field, k.params))));
    }
    return rows;
}

// ---- 6: continuation --------------------------------------------------------------

Rows continuation_items() {
    Rows rows;
    for (int p = 1; p <= 4; ++p) {
        const double cp = explicit_speed(p);
        const GridSpec grid = default_grid({double(p), 0.9 * cp, 1.0}, 512);
        const SolitonProfile seed = explicit_gkw_soliton(p, grid, 1.0);
        bool completed = true;
        double max_residual = 0.0;
        double min_margin = std::numeric_limits<double>::infinity();
        std::string failure;
        for (double target : {0.9 * cp, 1.1 * cp}) {
            const Branch br = newton_continue(seed, target, 10);
            completed = completed && br.completed;
            if (!br.completed) failure += br.failure + "; ";
            for (const BranchPoint& bp : br.points) {
                max_residual = std::max(max_residual, bp.newton_residual);
                min_margin = std::min(min_margin, bp.coercivity_margin);
            }
        }
        rows.push_back(make_check(tag("branch_converged", p), 6, completed && max_residual < 1e-9,
                                  "max Newton residual " + num(max_residual) + (failure.empty() ? "" : "; " + failure)));
        rows.push_back(make_check(tag("coercivity_positive", p), 6, min_margin > 0.0,
                                  "min margin over c in [0.9, 1.1] c_p: " + num(min_margin)));
    }
    const GridSpec grid5 = default_grid({5.0, explicit_speed(5), 1.0}, 512);
    const double m5 = coercivity_check(explicit_gkw_soliton(5, grid5, 1.0));
    rows.push_back(make_check("coercivity_negative_p5", 6, m5 < 0.0, "margin at c_5: " + num(m5)));
    return rows;
}

// ---- 7: ground states -------------------------------------------------------------

Rows groundstate_items() {
    Rows rows;
    rows.push_back(make_report("beta_1", 7, 9.6, beta_p(1), 1e-12));
    const std::vector<double> mus{1e-1, 1e-2, 1e-3, 1e-4};
    for (int p = 1; p <= 3; ++p) {
        const double beta = beta_p(p);
        std::vector<double> gaps, dists;
        std::string alphas;
        std::vector<double> fitted_mus, fitted_alphas;
        for (double mu : mus) {
            const std::string name = tag("ground_state", p) + "_mu" + mu_tag(mu);
            try {
                const MinimizationProblem problem = make_problem(p, mu);
                const GroundStateResult r = minimize(problem);
                const double k = functionals(r.psi, mu, p).k_p;
                const Field target = gkdv_soliton(1.0, p, problem.grid).field;
                rows.push_back(make_report(name + "_constraint", 7, 0.0, std::abs(k - beta) / beta, 1e-8,
                                           std::to_string(r.iterations) + " iterations"));
                rows.push_back(make_check(name + "_alpha_bound", 7, r.alpha >= 1.0 && r.alpha <= 1.05,
                                          "alpha " + fmt("%.9f", r.alpha)));
                gaps.push_back(r.alpha - 1.0);
                fitted_mus.push_back(mu);
                fitted_alphas.push_back(r.alpha);
                dists.push_back(sobolev_norm(r.phi - target, 1));
                alphas += fmt("%.9f ", r.alpha);
            } catch (const Error& e) {
                rows.push_back(make_check(name + "_converged", 7, false, e.what()));
            }
        }
        const auto decreasing = [](const std::vector<double>& v) {
            for (std::size_t i = 1; i < v.size(); ++i)
                if (!(std::abs(v[i]) < std::abs(v[i - 1]))) return false;
            return true;
        };
        std::string dist_text;
        for (double d : dists) dist_text += num(d) + " ";
        rows.push_back(make_check(tag("alpha_to_one", p), 7, gaps.size() == mus.size() && decreasing(gaps),
                                  "alpha along mu = 1e-1..1e-4: " + alphas +
                                      (fitted_mus.empty() ? std::string()
                                                          : "; fitted slope " +
                                                                num(alpha_slope(fitted_mus, fitted_alphas)))));
        rows.push_back(make_check(tag("h1_distance_decreasing", p), 7, dists.size() == mus.size() && decreasing(dists),
                                  "H1 distance to the gKdV soliton: " + dist_text));
        try {
            rows.push_back(make_report(tag("scaling_identity", p), 7, 0.0, scaling_identity_check(p, 1e-2, 0.5 * beta),
                                       1e-6, "mu 1e-2, beta = beta_p / 2"));
            const UniquenessProbe probe = empirical_uniqueness_probe(make_problem(p, 1e-2), 4);
            rows.push_back(make_check(tag("multistart_spread", p), 7, probe.converged >= 2 && probe.spread < 1e-8,
                                      "spread " + num(probe.spread) + ", " + std::to_string(probe.converged) +
                                          " converged, " + std::to_string(probe.excluded) + " excluded"));
        } catch (const Error& e) {
            rows.push_back(make_check(tag("scaling_and_uniqueness", p), 7, false, e.what()));
        }
    }
    return rows;
}

// ---- 8: evolution -----------------------------------------------------------------

Rows evolution_items() {
    Rows rows;
    const WaveParams ref{1.0, explicit_speed(1), 1.0};
    const GridSpec grid = default_grid(ref, 1024);
    const SolitonProfile phi = explicit_gkw_soliton(1, grid, 1.0);
    const Field bump = Field::sample(grid, [](double x) { return std::exp(-x * x); });

    const StabilityTrace exact = evolve_and_track(phi, bump, 0.0, 50.0, 1e-3, 0.5);
    rows.push_back(make_report("exact_soliton_h2_error", 8, 0.0, exact.sup_distance, 1e-5, "p 1, T 50, dt 1e-3, N 1024"));
    rows.push_back(make_report("energy_drift", 8, 0.0, exact.energy_drift, 1e-8));
    rows.push_back(make_report("mass_drift", 8, 0.0, exact.mass_drift, 1e-8));
    rows.push_back(make_report("measured_speed", 8, ref.c, exact.measured_speed, 1e-3 * ref.c));

    // Order check where truncation error dominates round-off.
    const StabilityTrace coarse = evolve_and_track(phi, bump, 0.0, 50.0, 0.05, 0.5);
    const StabilityTrace fine = evolve_and_track(phi, bump, 0.0, 50.0, 0.025, 0.5);
    const double e_ratio = coarse.energy_drift / fine.energy_drift;
    const double v_ratio = coarse.mass_drift / fine.mass_drift;
    rows.push_back(make_check("dt_halving_order", 8, e_ratio >= 8.0 && v_ratio >= 8.0,
                              "drift ratio dt 0.05 -> 0.025: energy " + num(e_ratio) + ", mass " + num(v_ratio)));

    const Field u0 = phi.field + bump * 1e-2;
    rows.push_back(make_report("time_reversal", 8, 0.0, time_reversal_error(u0, ref, 1.0, 1e-3), 1e-6));

    const auto experiment = [&](int p, BranchKind branch) {
        ExperimentConfig cfg;
        cfg.p = p;
        cfg.branch = branch;
        cfg.delta = 1e-3;
        cfg.horizon = 100.0;
        const bool slow = branch == BranchKind::slow_family;
        const std::string name = std::string(slow ? "stable_slow" : "stable_explicit") + "_p" + std::to_string(p);
        try {
            const StabilityTrace t = stability_experiment(cfg);
            rows.push_back(make_check(name, 8, !t.aborted && t.sup_distance < 5.0 * cfg.delta,
                                      "sup distance / delta " + num(t.sup_distance / cfg.delta) +
                                          "; stable up to T = 100 (finite horizon, not a proof of orbital stability)" +
                                          (t.aborted ? "; aborted: " + t.abort_reason : "")));
        } catch (const Error& e) {
            rows.push_back(make_check(name, 8, false, e.what()));
        }
    };
    for (int p = 1; p <= 4; ++p) experiment(p, BranchKind::explicit_family);
    for (int p = 1; p <= 3; ++p) experiment(p, BranchKind::slow_family);
    return rows;
}

}  // namespace

ReproductionReport make_report(std::string item, int criterion, double paper_value, double computed_value,
                               double tolerance, std::string detail) {
    const bool pass = std::abs(computed_value - paper_value) <= tolerance * std::max(1.0, std::abs(paper_value));
    return {std::move(item), criterion, paper_value, computed_value, tolerance, pass, std::move(detail)};
}

ReproductionReport make_absolute_report(std::string item, int criterion, double paper_value, double computed_value,
                                        double bound, std::string detail) {
    return make_report(std::move(item), criterion, paper_value, computed_value,
                       bound / std::max(1.0, std::abs(paper_value)), std::move(detail));
}

ReproductionReport make_check(std::string item, int criterion, bool ok, std::string detail) {
    return make_report(std::move(item), criterion, 1.0, ok ? 1.0 : 0.0, 0.0, std::move(detail));
}

std::vector<ReproductionReport> reproduce_criterion(int criterion) {
    try {
        switch (criterion) {
            case 1: return index_items();
            case 2: return pcrit_items();
            case 3: return spectral_items();
            case 4: return albert_items();
            case 5: return residual_items();
            case 6: return continuation_items();
            case 7: return groundstate_items();
            case 8: return evolution_items();
            default: break;
        }
    } catch (const Error& e) {
        std::string detail = e.what();
        if (const auto* ce = dynamic_cast<const ComputationError*>(&e)) detail += " [" + ce->diagnostics() + "]";
        return {make_check("criterion_" + std::to_string(criterion) + "_error", criterion, false, detail)};
    }
    throw InvalidArgument("unknown reproduce criterion " + std::to_string(criterion));
}

std::vector<ReproductionReport> reproduce_all(const ReproduceOptions& options) {
    for (int c : options.criteria) require(c >= 1 && c <= 8, "reproduce criteria are 1..8");
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned threads = std::max(1u, options.threads == 0 ? hw : options.threads);

    // Bounded fan-out; results are gathered in criterion order, so the
    // table does not depend on scheduling.
    const std::vector<int> order(options.criteria.begin(), options.criteria.end());
    std::vector<Rows> results(order.size());
    for (std::size_t start = 0; start < order.size(); start += threads) {
        std::vector<std::future<Rows>> batch;
        const std::size_t end = std::min(order.size(), start + threads);
        for (std::size_t i = start; i < end; ++i) {
            const int c = order[i];
            batch.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async,
                                       [c] { return reproduce_criterion(c); }));
        }
        for (std::size_t i = start; i < end; ++i) results[i] = batch[i - start].get();
    }
    Rows all;
    for (Rows& r : results) std::move(r.begin(), r.end(), std::back_inserter(all));
    return all;
}

bool all_passed(const std::vector<ReproductionReport>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const ReproductionReport& r) { return r.pass; });
}

}  // namespace gkw
