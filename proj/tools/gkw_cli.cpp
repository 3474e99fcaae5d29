// gkw: command-line front end for the solitary-wave library.
//
// Exit codes: 0 success, 1 usage error, 2 computation failure,
// 3 golden-suite failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkw/field_io.hpp"
#include "gkw/report_json.hpp"

namespace {

using gkw::io::Json;

enum Exit { ok = 0, usage = 1, computation = 2, golden = 3 };

struct Common {
    std::string output;
    std::string format = "json";
    std::size_t num_points = 0;  // 0: command default or GKW_NUM_POINTS
    double half_length = 0.0;    // 0: derived from the decay rate or GKW_HALF_LENGTH
};

std::size_t env_points(std::size_t fallback) {
    if (const char* s = std::getenv("GKW_NUM_POINTS")) return static_cast<std::size_t>(std::stoul(s));
    return fallback;
}

double env_half_length() {
    if (const char* s = std::getenv("GKW_HALF_LENGTH")) return std::stod(s);
    return 0.0;
}

std::size_t points(const Common& c, std::size_t fallback) {
    return c.num_points > 0 ? c.num_points : env_points(fallback);
}

gkw::GridSpec grid_for(const Common& c, const gkw::WaveParams& params, std::size_t fallback) {
    const std::size_t n = points(c, fallback);
    const double l = c.half_length > 0.0 ? c.half_length : env_half_length();
    return l > 0.0 ? gkw::GridSpec(l, n) : gkw::default_grid(params, n);
}

void emit(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        gkw::io::write_file_atomic(c.output, text);
    }
}

void emit_json(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

void require_json_only(const Common& c, const char* command) {
    gkw::require(c.format == "json", std::string(command) + " supports --format json only");
}

int fail(const char* kind, const std::string& message, const std::string& diagnostics, int code) {
    Json j{{"error", kind}, {"message", message}};
    if (!diagnostics.empty()) j["diagnostics"] = diagnostics;
    std::cerr << j.dump() << '\n';
    return code;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stod(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solitary waves of the generalized Kawahara equation"};
    app.require_subcommand(1);
    Common common;
    app.add_option("-o,--output", common.output, "Write results here (atomically) instead of stdout");
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--num-points", common.num_points, "Grid size override (env GKW_NUM_POINTS)");
    app.add_option("--half-length", common.half_length, "Half box length override (env GKW_HALF_LENGTH)");

    // soliton
    double sol_p = 1.0, sol_mu = 1.0, sol_c = 1.0;
    std::string sol_kind = "explicit";
    bool check_residual = false, with_field = false;
    auto* soliton = app.add_subcommand("soliton", "Closed-form solitary wave and its residual");
    soliton->add_option("--p", sol_p, "Exponent p >= 1")->check(CLI::Range(1.0, 64.0));
    soliton->add_option("--mu", sol_mu, "Fifth-order coefficient (explicit kind; speed c_p / mu)");
    soliton->add_option("--c", sol_c, "Speed (gkdv kind)");
    soliton->add_option("--kind", sol_kind, "explicit or gkdv")->check(CLI::IsMember({"explicit", "gkdv"}));
    soliton->add_flag("--check-residual", check_residual, "Fail with exit 2 unless the residual is < 1e-8");
    soliton->add_flag("--field", with_field, "Include the samples in JSON output");

    // spectrum
    double spec_p = 1.0;
    int spec_k = 6;
    bool spec_vectors = false;
    auto* spectrum = app.add_subcommand("spectrum", "Bottom of the spectrum of the linearized operator");
    spectrum->add_option("--p", spec_p, "Exponent p >= 1")->check(CLI::Range(1.0, 64.0));
    spectrum->add_option("--k", spec_k, "Number of eigenpairs")->check(CLI::Range(3, 200));
    spectrum->add_flag("--eigenfunctions", spec_vectors, "Include eigenfunctions in JSON output");

    // albert
    double alb_p = 1.0, alb_omega = 50.0;
    int alb_samples = 2000;
    auto* albert = app.add_subcommand("albert", "Fourier-side positivity and log-concavity check");
    albert->add_option("--p", alb_p, "Exponent p >= 1")->check(CLI::Range(1.0, 64.0));
    albert->add_option("--omega-max", alb_omega, "Upper end of the sampled frequencies")->check(CLI::PositiveNumber);
    albert->add_option("--samples", alb_samples, "Number of log-spaced samples")->check(CLI::Range(2, 1000000));

    // index
    double idx_p = 1.0, idx_rmax = 0.0;
    std::string idx_method = "both", idx_scan;
    bool idx_pcrit = false, idx_rho = false;
    auto* index = app.add_subcommand("index", "Stability index J_p = <L^{-1} phi, phi>");
    index->add_option("--p", idx_p, "Exponent p >= 1")->check(CLI::Range(1.0, 64.0));
    index->add_option("--r-max", idx_rmax, "Half-line truncation (BVP); 0 picks the default");
    index->add_option("--method", idx_method, "bvp, spectral or both")->check(CLI::IsMember({"bvp", "spectral", "both"}));
    index->add_option("--scan", idx_scan, "lo:hi:count scan of the spectral index");
    index->add_flag("--critical", idx_pcrit, "Bisect for the sign change of J_p in [4, 5]");
    index->add_flag("--rho", idx_rho, "Include rho in JSON output");

    // continue
    double cont_p = 1.0, cont_target = 0.0;
    int cont_steps = 10;
    auto* cont = app.add_subcommand("continue", "Newton continuation in c at mu = 1 from the explicit wave");
    cont->add_option("--p", cont_p, "Exponent p >= 1")->check(CLI::Range(1.0, 64.0));
    cont->add_option("--c-target", cont_target, "Final speed (default 1.1 c_p)");
    cont->add_option("--steps", cont_steps, "Number of uniform steps")->check(CLI::Range(1, 100000));

    // groundstate
    int gs_p = 1, gs_multistart = 0;
    double gs_mu = 1e-2, gs_beta = 0.0;
    std::string gs_scan;
    bool gs_fields = false, gs_p4 = false;
    std::uint64_t gs_seed = 20240607;
    auto* gs = app.add_subcommand("groundstate", "Constrained minimizer of I_mu at fixed K_p");
    gs->add_option("--p", gs_p, "Exponent in {1, 2, 3}")->check(CLI::Range(1, 4));
    gs->add_option("--mu", gs_mu, "Fifth-order coefficient")->check(CLI::PositiveNumber);
    gs->add_option("--beta", gs_beta, "Constraint level (default beta_p)");
    gs->add_option("--mu-scan", gs_scan, "Comma-separated mu values; reports alpha and the gKdV distance");
    gs->add_option("--multistart", gs_multistart, "Random even starts for the uniqueness probe")->check(CLI::Range(0, 1000));
    gs->add_option("--seed", gs_seed, "Seed for the multi-start guesses");
    gs->add_flag("--fields", gs_fields, "Include psi and phi in JSON output");
    gs->add_flag("--allow-p4", gs_p4, "Permit p = 4 (outside the covered range)");

    // evolve
    gkw::ExperimentConfig ev;
    std::string ev_branch = "explicit", ev_pert = "gaussian";
    auto* evolve = app.add_subcommand("evolve", "Perturbed-soliton evolution and orbital distance trace");
    evolve->add_option("--p", ev.p, "Integer exponent 1..5")->check(CLI::Range(1, 5));
    evolve->add_option("--branch", ev_branch, "explicit or slow")->check(CLI::IsMember({"explicit", "slow"}));
    evolve->add_option("--param", ev.param, "c (explicit, default c_p) or mu (slow, default 1e-2)");
    evolve->add_option("--delta", ev.delta, "Perturbation size in H^2")->check(CLI::NonNegativeNumber);
    evolve->add_option("--horizon", ev.horizon, "Final time")->check(CLI::NonNegativeNumber);
    evolve->add_option("--dt", ev.dt, "Time step")->check(CLI::PositiveNumber);
    evolve->add_option("--sample-every", ev.sample_every, "Sampling interval")->check(CLI::PositiveNumber);
    evolve->add_option("--perturbation", ev_pert, "gaussian or eigenfunction")
        ->check(CLI::IsMember({"gaussian", "eigenfunction"}));

    // reproduce
    std::vector<int> rep_criteria;
    unsigned rep_threads = 0;
    auto* reproduce = app.add_subcommand("reproduce", "Golden suite: pass/fail table for criteria 1-8");
    reproduce->add_option("--criteria", rep_criteria, "Subset of criteria to run")->delimiter(',')->check(CLI::Range(1, 8));
    reproduce->add_option("--threads", rep_threads, "Worker threads (0: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Exit::usage;
    }

    try {
        const bool csv = common.format == "csv";
        if (soliton->parsed()) {
            gkw::SolitonProfile prof = [&] {
                if (sol_kind == "gkdv") {
                    const gkw::WaveParams prm{sol_p, sol_c, 0.0};
                    prm.validate();
                    gkw::require(sol_c > 0.0, "speed must be positive");
                    return gkw::gkdv_soliton(sol_c, sol_p, grid_for(common, prm, 2048));
                }
                gkw::require(sol_mu > 0.0, "explicit waves need mu > 0");
                const gkw::WaveParams prm{sol_p, gkw::explicit_speed(sol_p) / sol_mu, sol_mu};
                return gkw::explicit_gkw_soliton(sol_p, grid_for(common, prm, 2048), sol_mu);
            }();
            const double residual = gkw::closed_form_residual(prof);
            if (csv) {
                emit(common, gkw::io::field_to_csv(prof.field));
            } else {
                Json j = gkw::io::to_json(prof, with_field);
                j["closed_form_residual"] = residual;
                emit_json(common, j);
            }
            if (check_residual && !(residual < 1e-8))
                return fail("computation", "residual check failed", "closed-form residual " + std::to_string(residual),
                            Exit::computation);
        } else if (spectrum->parsed()) {
            require_json_only(common, "spectrum");
            const gkw::WaveParams prm{spec_p, 1.0, gkw::explicit_speed(spec_p)};
            const gkw::SolitonProfile phi =
                gkw::explicit_gkw_soliton(spec_p, grid_for(common, prm, 1024), gkw::explicit_speed(spec_p));
            const gkw::SpectrumReport r = gkw::bottom_spectrum(gkw::LinearizedOperator::assemble(phi), spec_k);
            Json j = gkw::io::to_json(r, spec_vectors);
            j["params"] = gkw::io::to_json(phi.params);
            emit_json(common, j);
        } else if (albert->parsed()) {
            require_json_only(common, "albert");
            Json j = gkw::io::to_json(gkw::albert_criterion(alb_p, alb_omega, alb_samples));
            j["log_curvature_at_1"] = gkw::sech4_log_curvature(1.0);
            emit_json(common, j);
        } else if (index->parsed()) {
            if (!idx_scan.empty()) {
                const auto parts = [&] {
                    std::vector<std::string> v;
                    std::stringstream in(idx_scan);
                    std::string s;
                    while (std::getline(in, s, ':')) v.push_back(s);
                    return v;
                }();
                gkw::require(parts.size() == 3, "--scan expects lo:hi:count");
                const auto rows = gkw::index_scan(std::stod(parts[0]), std::stod(parts[1]), std::stoi(parts[2]));
                if (csv) {
                    emit(common, gkw::io::scan_csv(rows));
                } else {
                    Json arr = Json::array();
                    for (const auto& r : rows) arr.push_back({{"p", r.p}, {"j_half", r.j_half}, {"j_full", r.j_full}});
                    emit_json(common, arr);
                }
            } else if (idx_pcrit) {
                require_json_only(common, "index --critical");
                emit_json(common, Json{{"p_crit", gkw::critical_exponent(4.0, 5.0, 1e-4)}});
            } else {
                require_json_only(common, "index");
                gkw::BvpOptions opts;
                opts.r_max = idx_rmax;
                std::optional<gkw::IndexReport> bvp, spec;
                if (idx_method != "spectral") bvp = gkw::index_bvp(idx_p, opts);
                if (idx_method != "bvp") {
                    const std::size_t n = points(common, 1024);
                    spec = gkw::index_spectral(idx_p, gkw::default_index_grid(idx_p, n), true);
                }
                if (bvp && spec) {
                    Json j = gkw::io::to_json(gkw::with_agreement(*bvp, *spec), idx_rho);
                    j["spectral"] = gkw::io::to_json(gkw::with_agreement(*spec, *bvp), false);
                    emit_json(common, j);
                } else {
                    emit_json(common, gkw::io::to_json(bvp ? *bvp : *spec, idx_rho));
                }
            }
        } else if (cont->parsed()) {
            const double cp = gkw::explicit_speed(cont_p);
            const double target = cont_target > 0.0 ? cont_target : 1.1 * cp;
            gkw::require(target > 0.0, "--c-target must be positive");
            const gkw::WaveParams prm{cont_p, std::min(cp, target), 1.0};
            const gkw::SolitonProfile seed = gkw::explicit_gkw_soliton(cont_p, grid_for(common, prm, 512), 1.0);
            const gkw::Branch br = gkw::newton_continue(seed, target, cont_steps);
            if (csv) emit(common, gkw::io::branch_csv(br));
            else emit_json(common, gkw::io::to_json(br));
            if (!br.completed) return fail("computation", "continuation stopped early", br.failure, Exit::computation);
        } else if (gs->parsed()) {
            const std::size_t n = points(common, 1024);
            if (!gs_scan.empty()) {
                const auto rows = gkw::mu_scan(gs_p, parse_list(gs_scan), n);
                if (csv) {
                    emit(common, gkw::io::mu_scan_csv(rows));
                } else {
                    Json arr = Json::array();
                    for (const auto& r : rows)
                        arr.push_back({{"mu", r.mu}, {"alpha", r.alpha}, {"i_value", r.i_value},
                                       {"h1_distance_to_gkdv", r.h1_distance_to_gkdv}});
                    emit_json(common, Json{{"alpha_slope", gkw::alpha_slope(rows)}, {"rows", std::move(arr)}});
                }
            } else {
                require_json_only(common, "groundstate");
                const gkw::MinimizationProblem problem{
                    .p = gs_p,
                    .mu = gs_mu,
                    .beta_target = gs_beta > 0.0 ? gs_beta : gkw::beta_p(gs_p),
                    .grid = gkw::make_problem(1, gs_mu, std::nullopt, n).grid,
                    .allow_p4 = gs_p4};
                problem.validate();
                Json j = gkw::io::to_json(gkw::minimize(problem), gs_fields);
                j["p"] = gs_p;
                j["mu"] = gs_mu;
                j["beta"] = problem.beta_target;
                if (gs_multistart > 0) {
                    const auto probe = gkw::empirical_uniqueness_probe(problem, gs_multistart, gs_seed);
                    j["multistart"] = {{"spread", probe.spread}, {"converged", probe.converged},
                                       {"excluded", probe.excluded}, {"seed", gs_seed}};
                }
                emit_json(common, j);
            }
        } else if (evolve->parsed()) {
            ev.branch = ev_branch == "slow" ? gkw::BranchKind::slow_family : gkw::BranchKind::explicit_family;
            ev.perturbation = ev_pert == "eigenfunction" ? gkw::Perturbation::eigenfunction : gkw::Perturbation::gaussian;
            ev.num_points = points(common, ev.num_points);
            const gkw::StabilityTrace t = gkw::stability_experiment(ev);
            if (csv) emit(common, gkw::io::trace_csv(t));
            else emit_json(common, gkw::io::to_json(t));
            if (t.aborted) return fail("computation", "evolution aborted", t.abort_reason, Exit::computation);
        } else if (reproduce->parsed()) {
            gkw::ReproduceOptions opts;
            if (!rep_criteria.empty()) opts.criteria = {rep_criteria.begin(), rep_criteria.end()};
            opts.threads = rep_threads;
            const auto rows = gkw::reproduce_all(opts);
            if (csv) emit(common, gkw::io::reproduction_csv(rows));
            else emit_json(common, gkw::io::to_json(rows));
            if (!gkw::all_passed(rows)) return Exit::golden;
        }
    } catch (const gkw::InvalidArgument& e) {
        return fail("usage", e.what(), "", Exit::usage);
    } catch (const gkw::ComputationError& e) {
        return fail("computation", e.what(), e.diagnostics(), Exit::computation);
    } catch (const std::invalid_argument& e) {
        return fail("usage", std::string("malformed number: ") + e.what(), "", Exit::usage);
    } catch (const std::exception& e) {
        return fail("computation", e.what(), "", Exit::computation);
    }
    return Exit::ok;
}
