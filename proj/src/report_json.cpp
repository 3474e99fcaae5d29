#include "gkw/report_json.hpp"

#include <cmath>
#include <sstream>

#include "gkw/field_io.hpp"

namespace gkw::io {

namespace {

/// NaN and infinities become null, which JSON readers accept.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string csv_row(std::initializer_list<double> values) {
    std::string line;
    for (double v : values) {
        if (!line.empty()) line += ',';
        line += format_double(v);
    }
    return line + '\n';
}

}  // namespace

Json to_json(const WaveParams& params) {
    return Json{{"p", params.p}, {"c", params.c}, {"mu", params.mu}};
}

Json to_json(const Field& f) {
    Json j;
    j["half_length"] = f.grid().half_length();
    j["num_points"] = f.grid().num_points();
    j["values"] = Json(std::vector<double>(f.values().begin(), f.values().end()));
    return j;
}

Json to_json(const SolitonProfile& profile, bool include_field) {
    Json j = to_json(profile.params);
    j["amplitude"] = profile.amplitude;
    j["decay_scale"] = profile.decay_scale;
    j["residual_l2"] = residual_norm(profile.field, profile.params);
    j["grid"] = {{"half_length", profile.field.grid().half_length()},
                 {"num_points", profile.field.grid().num_points()}};
    if (include_field) j["field"] = to_json(profile.field);
    return j;
}

Json to_json(const SpectrumReport& r, bool include_eigenfunctions) {
    Json j;
    j["eigenvalues"] = r.eigenvalues;
    j["even"] = r.even;
    j["residual_norms"] = r.residual_norms;
    j["negative_count"] = r.negative_count;
    j["kernel_eigenvalue"] = r.kernel_eigenvalue;
    j["kernel_alignment"] = r.kernel_alignment;
    j["kernel_found"] = r.kernel_found;
    j["essential_floor"] = r.essential_floor;
    if (include_eigenfunctions) {
        Json fns = Json::array();
        for (const Field& f : r.eigenfunctions) fns.push_back(to_json(f));
        j["eigenfunctions"] = std::move(fns);
    }
    return j;
}

Json to_json(const AlbertReport& r) {
    return Json{{"positivity_ok", r.positivity_ok},     {"logconcavity_ok", r.logconcavity_ok},
                {"worst_margin", r.worst_margin},       {"min_transform_ratio", r.min_transform_ratio},
                {"max_curvature", r.max_curvature},     {"samples", r.samples}};
}

Json to_json(const IndexReport& r, bool include_rho) {
    Json j{{"p", r.p},
           {"j_half", r.j_half},
           {"j_full", r.j_full},
           {"r_max", r.r_max},
           {"method", r.method},
           {"method_agreement", number(r.method_agreement)},
           {"refinement_change", number(r.refinement_change)},
           {"pairing_identity_error", number(r.pairing_identity_error)}};
    if (include_rho) j["rho"] = to_json(r.rho);
    return j;
}

Json to_json(const Branch& branch) {
    Json points = Json::array();
    for (const BranchPoint& bp : branch.points) {
        points.push_back({{"c", bp.params.c},
                          {"newton_residual", bp.newton_residual},
                          {"newton_iterations", bp.newton_iterations},
                          {"coercivity_margin", bp.coercivity_margin},
                          {"distance_to_seed", bp.distance_to_seed},
                          {"gamma", bp.gamma},
                          {"negative_count", bp.negative_count},
                          {"amplitude", bp.profile.amplitude}});
    }
    Json j;
    if (!branch.points.empty()) j["params"] = to_json(branch.points.front().params);
    j["completed"] = branch.completed;
    j["failure"] = branch.failure;
    j["admissible_window"] = admissible_window(branch);
    j["points"] = std::move(points);
    return j;
}

Json to_json(const GroundStateResult& r, bool include_fields) {
    Json j{{"alpha", r.alpha},
           {"i_value", r.i_value},
           {"iterations", r.iterations},
           {"euler_lagrange_residual", r.euler_lagrange_residual},
           {"profile_residual", r.profile_residual},
           {"history", r.history}};
    if (include_fields) {
        j["psi"] = to_json(r.psi);
        j["phi"] = to_json(r.phi);
    }
    return j;
}

Json to_json(const StabilityTrace& t) {
    return Json{{"params", to_json(t.params)},
                {"times", t.times},
                {"orbital_distances", t.orbital_distances},
                {"best_shifts", t.best_shifts},
                {"energies", t.energies},
                {"masses", t.masses},
                {"energy_drift", t.energy_drift},
                {"mass_drift", t.mass_drift},
                {"sup_distance", t.sup_distance},
                {"measured_speed", t.measured_speed},
                {"aborted", t.aborted},
                {"abort_reason", t.abort_reason},
                {"outside_proven_regime", t.outside_proven_regime},
                {"note", "finite-horizon experiment: stable up to the final time only"}};
}

Json to_json(const ReproductionReport& row) {
    return Json{{"item", row.item},
                {"criterion", row.criterion},
                {"paper_value", number(row.paper_value)},
                {"computed_value", number(row.computed_value)},
                {"tolerance", row.tolerance},
                {"pass", row.pass},
                {"detail", row.detail}};
}

Json to_json(const std::vector<ReproductionReport>& rows) {
    Json items = Json::array();
    int failed = 0;
    for (const ReproductionReport& r : rows) {
        items.push_back(to_json(r));
        failed += r.pass ? 0 : 1;
    }
    return Json{{"all_passed", failed == 0}, {"failed", failed}, {"items", std::move(items)}};
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "p,j_half,j_full\n";
    for (const ScanRow& r : rows) out += csv_row({r.p, r.j_half, r.j_full});
    return out;
}

std::string branch_csv(const Branch& branch) {
    std::string out = "c,newton_residual,coercivity_margin,distance_to_seed,gamma,negative_count\n";
    for (const BranchPoint& bp : branch.points)
        out += csv_row({bp.params.c, bp.newton_residual, bp.coercivity_margin, bp.distance_to_seed, bp.gamma,
                        static_cast<double>(bp.negative_count)});
    return out;
}

std::string mu_scan_csv(const std::vector<MuScanRow>& rows) {
    std::string out = "mu,alpha,i_value,h1_distance_to_gkdv\n";
    for (const MuScanRow& r : rows) out += csv_row({r.mu, r.alpha, r.i_value, r.h1_distance_to_gkdv});
    return out;
}

std::string trace_csv(const StabilityTrace& t) {
    std::string out = "t,distance,shift,E,V\n";
    for (std::size_t i = 0; i < t.times.size(); ++i)
        out += csv_row({t.times[i], t.orbital_distances[i], t.best_shifts[i], t.energies[i], t.masses[i]});
    return out;
}

std::string reproduction_csv(const std::vector<ReproductionReport>& rows) {
    std::ostringstream out;
    out << "item,criterion,paper_value,computed_value,tolerance,pass\n";
    for (const ReproductionReport& r : rows)
        out << r.item << ',' << r.criterion << ',' << format_double(r.paper_value) << ','
            << format_double(r.computed_value) << ',' << format_double(r.tolerance) << ','
            << (r.pass ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace gkw::io
